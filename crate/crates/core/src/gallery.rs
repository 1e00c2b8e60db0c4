//! Small fixtures, each a finite stand-in for one determination scheme.
//!
//! | fixture | scheme | parameters |
//! |---|---|---|
//! | `chain-galois` | Galois connection `x ≤ 2a` between chains `0..=n` and `0..=m` | `n` 0..=16 (4), `m` 0..=8 (2) |
//! | `powerset-diagonal` | `join ⊣ Δ ⊣ meet` on subsets of `{1..k}` | `k` 1..=3 (2) |
//! | `free-discrete-preorder` | discrete preorder as free object on a set | `max` 0..=3 (2) |
//! | `coordinate-coding` | points of a `w × h` grid coded by coordinates | `w` 1..=4 (2), `h` 1..=4 (2) |
//! | `hom-identity` | the hom bifunctor of a chain, represented by the identity | `n` 1..=8 (3) |
//!
//! Selection through a receiving universal is modelled by any left
//! semiadjunction: the representing object plays the generator of diversity,
//! the universal het the polling step and the factor hom the differential
//! amplification. [`selection_report`] renders one het that way. The analogy is
//! structural only; nothing here models a biological process.

use std::collections::HashMap;
use std::fmt::{self, Write};
use std::sync::Arc;

use thiserror::Error;

use crate::adjoint::{assemble_adjunction, brain_from_adjoints, check_brain, Adjunction};
use crate::cli::spec::SpecDocument;
use crate::error::{Error, Result};
use crate::fincat::{CategoryBuilder, FinCategory, Obj};
use crate::functor::{
    hom_bifunctor, induced_het_left, induced_het_right, FinFunctor, FunctorBuilder,
};
use crate::het::{El, HetBuilder};
use crate::represent::{find_left_representation, find_right_representation, Semiadjunction, Side};

pub const FIXTURE_NAMES: [&str; 5] = [
    "chain-galois",
    "powerset-diagonal",
    "free-discrete-preorder",
    "coordinate-coding",
    "hom-identity",
];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GalleryError {
    #[error("unknown fixture `{0}` (known: chain-galois, powerset-diagonal, free-discrete-preorder, coordinate-coding, hom-identity)")]
    UnknownFixture(String),
    #[error("fixture `{fixture}` has no parameter `{param}`")]
    UnknownParameter { fixture: String, param: String },
    #[error("parameter `{param}` = {value} is outside {min}..={max}")]
    OutOfRange {
        param: String,
        value: usize,
        min: usize,
        max: usize,
    },
    #[error("malformed parameter `{0}`, expected name=value")]
    Malformed(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParamSpec {
    pub name: &'static str,
    pub default: usize,
    pub min: usize,
    pub max: usize,
}

const fn p(name: &'static str, default: usize, min: usize, max: usize) -> ParamSpec {
    ParamSpec {
        name,
        default,
        min,
        max,
    }
}

pub fn fixture_params(name: &str) -> std::result::Result<&'static [ParamSpec], GalleryError> {
    const CHAIN: [ParamSpec; 2] = [p("n", 4, 0, 16), p("m", 2, 0, 8)];
    const POWER: [ParamSpec; 1] = [p("k", 2, 1, 3)];
    const FREE: [ParamSpec; 1] = [p("max", 2, 0, 3)];
    const COORD: [ParamSpec; 2] = [p("w", 2, 1, 4), p("h", 2, 1, 4)];
    const HOM: [ParamSpec; 1] = [p("n", 3, 1, 8)];
    Ok(match name {
        "chain-galois" => &CHAIN,
        "powerset-diagonal" => &POWER,
        "free-discrete-preorder" => &FREE,
        "coordinate-coding" => &COORD,
        "hom-identity" => &HOM,
        _ => return Err(GalleryError::UnknownFixture(name.to_string())),
    })
}

/// Parses `name=value` arguments.
pub fn parse_params(args: &[String]) -> std::result::Result<Vec<(String, usize)>, GalleryError> {
    args.iter()
        .map(|a| {
            let (k, v) = a
                .split_once('=')
                .ok_or_else(|| GalleryError::Malformed(a.clone()))?;
            let v = v.parse().map_err(|_| GalleryError::Malformed(a.clone()))?;
            Ok((k.to_string(), v))
        })
        .collect()
}

/// A result the fixture is expected to reproduce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expectation {
    /// Representing object (and universal element, when given) per base object.
    Representation {
        het: String,
        side: Side,
        table: Vec<(String, Option<String>)>,
        universals: Option<Vec<String>>,
    },
    /// The semiadjunction found by search has exactly this functor.
    Semiadjunction {
        het: String,
        side: Side,
        functor: String,
    },
    Adjunction {
        het: String,
    },
    Brain {
        functor: String,
        het_out: String,
        het_in: String,
    },
    AdjointTriple {
        left: String,
        mid: String,
        right: String,
    },
}

impl fmt::Display for Expectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |s: &Side| if *s == Side::Left { "left" } else { "right" };
        match self {
            Expectation::Representation { het, side: s, .. } => {
                write!(f, "{} representations of {het}", side(s))
            }
            Expectation::Semiadjunction {
                het,
                side: s,
                functor,
            } => {
                write!(
                    f,
                    "{} semiadjunction of {het} has functor {functor}",
                    side(s)
                )
            }
            Expectation::Adjunction { het } => write!(f, "adjunction over {het}"),
            Expectation::Brain {
                functor,
                het_out,
                het_in,
            } => {
                write!(f, "{functor} is a brain functor for {het_out} / {het_in}")
            }
            Expectation::AdjointTriple { left, mid, right } => {
                write!(f, "{left} -| {mid} -| {right}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub expectation: String,
    pub passed: bool,
    pub detail: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub name: String,
    pub params: Vec<(String, usize)>,
    pub document: SpecDocument,
    pub expectations: Vec<Expectation>,
}

pub fn build_fixture(
    name: &str,
    params: &[(String, usize)],
) -> std::result::Result<Fixture, GalleryError> {
    let specs = fixture_params(name)?;
    let mut values: Vec<usize> = specs.iter().map(|s| s.default).collect();
    for (k, v) in params {
        let i = specs.iter().position(|s| s.name == k).ok_or_else(|| {
            GalleryError::UnknownParameter {
                fixture: name.to_string(),
                param: k.clone(),
            }
        })?;
        let s = specs[i];
        if *v < s.min || *v > s.max {
            return Err(GalleryError::OutOfRange {
                param: k.clone(),
                value: *v,
                min: s.min,
                max: s.max,
            });
        }
        values[i] = *v;
    }
    let (document, expectations) = match name {
        "chain-galois" => chain_galois(values[0], values[1]),
        "powerset-diagonal" => powerset_diagonal(values[0]),
        "free-discrete-preorder" => free_discrete_preorder(values[0]),
        "coordinate-coding" => coordinate_coding(values[0], values[1]),
        _ => hom_identity(values[0]),
    };
    Ok(Fixture {
        name: name.to_string(),
        params: specs
            .iter()
            .zip(values)
            .map(|(s, v)| (s.name.to_string(), v))
            .collect(),
        document,
        expectations,
    })
}

fn add_cat(doc: &mut SpecDocument, name: &str, cat: &Arc<FinCategory>) {
    doc.add_category(name, cat.clone())
        .expect("fixture names are distinct");
}

fn names(cat: &FinCategory) -> Vec<String> {
    cat.objects()
        .map(|x| cat.object_name(x).to_string())
        .collect()
}

fn chain_galois(n: usize, m: usize) -> (SpecDocument, Vec<Expectation>) {
    let x = Arc::new(FinCategory::chain(n + 1));
    let a = Arc::new(FinCategory::chain(m + 1));
    let mut b = HetBuilder::new();
    for i in 0..=n {
        for j in 0..=m {
            if i <= 2 * j {
                b.rel(&i.to_string(), &j.to_string());
            }
        }
    }
    let het = b
        .build(x.clone(), a.clone())
        .expect("monotone relations are het bifunctors");
    let mut doc = SpecDocument::new();
    add_cat(&mut doc, "X", &x);
    add_cat(&mut doc, "A", &a);
    doc.add_het("ceil", "X", "A", Arc::new(het))
        .expect("declared categories");

    let f = |i: usize| i.div_ceil(2);
    let g = |j: usize| (2 * j).min(n);
    let left: Vec<_> = (0..=n)
        .map(|i| (i.to_string(), (f(i) <= m).then(|| f(i).to_string())))
        .collect();
    let left_u = (f(n) <= m).then(|| (0..=n).map(|i| format!("u_{i}_{}", f(i))).collect());
    let mut exp = vec![
        Expectation::Representation {
            het: "ceil".into(),
            side: Side::Left,
            table: left,
            universals: left_u,
        },
        Expectation::Representation {
            het: "ceil".into(),
            side: Side::Right,
            table: (0..=m)
                .map(|j| (j.to_string(), Some(g(j).to_string())))
                .collect(),
            universals: Some((0..=m).map(|j| format!("u_{}_{j}", g(j))).collect()),
        },
    ];
    if f(n) <= m {
        exp.push(Expectation::Adjunction { het: "ceil".into() });
    }
    (doc, exp)
}

fn powerset_diagonal(k: usize) -> (SpecDocument, Vec<Expectation>) {
    let p = Arc::new(FinCategory::powerset(k));
    let diag = FinFunctor::diagonal(p.clone());
    let pp = diag.target().clone();
    let n = p.object_count();
    let split = |y: Obj| (y.index() / n, y.index() % n);
    let join = FinFunctor::from_object_map(pp.clone(), p.clone(), |y| {
        let (l, r) = split(y);
        Obj(l | r)
    })
    .expect("union is monotone");
    let meet = FinFunctor::from_object_map(pp.clone(), p.clone(), |y| {
        let (l, r) = split(y);
        Obj(l & r)
    })
    .expect("intersection is monotone");
    let mut doc = SpecDocument::new();
    add_cat(&mut doc, "P", &p);
    add_cat(&mut doc, "PP", &pp);
    doc.add_functor("diag", "P", "PP", diag.clone())
        .expect("declared");
    doc.add_functor("join", "PP", "P", join).expect("declared");
    doc.add_functor("meet", "PP", "P", meet).expect("declared");
    doc.add_het("diag_out", "P", "PP", Arc::new(induced_het_left(&diag)))
        .expect("declared");
    doc.add_het("diag_in", "PP", "P", Arc::new(induced_het_right(&diag)))
        .expect("declared");
    let semi = |het: &str, side, functor: &str| Expectation::Semiadjunction {
        het: het.into(),
        side,
        functor: functor.into(),
    };
    let exp = vec![
        semi("diag_out", Side::Left, "diag"),
        semi("diag_out", Side::Right, "meet"),
        semi("diag_in", Side::Left, "join"),
        semi("diag_in", Side::Right, "diag"),
        Expectation::Adjunction {
            het: "diag_out".into(),
        },
        Expectation::Adjunction {
            het: "diag_in".into(),
        },
        Expectation::Brain {
            functor: "diag".into(),
            het_out: "diag_out".into(),
            het_in: "diag_in".into(),
        },
        Expectation::AdjointTriple {
            left: "join".into(),
            mid: "diag".into(),
            right: "meet".into(),
        },
    ];
    (doc, exp)
}

/// Every function `[n] → [m]` as an image list, in lexicographic order.
fn functions(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0; n];
    if n > 0 && m == 0 {
        return out;
    }
    loop {
        out.push(cur.clone());
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < m {
                break;
            }
            cur[i] = 0;
        }
    }
}

fn images(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|i| i.to_string()).collect();
    format!("[{}]", parts.join(","))
}

/// Objects carrying finite sets, with the functions `allowed` admits as
/// morphisms and composition as function composition.
fn concrete_category(
    objects: &[(String, usize)],
    allowed: impl Fn(usize, usize, &[usize]) -> bool,
) -> FinCategory {
    let mut b = CategoryBuilder::new();
    b.objects(objects.iter().map(|(n, _)| n.clone()));
    let mut maps: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    let mut by_key: HashMap<(usize, usize, Vec<usize>), String> = HashMap::new();
    for (i, (ni, si)) in objects.iter().enumerate() {
        for (j, (nj, sj)) in objects.iter().enumerate() {
            for f in functions(*si, *sj) {
                if !allowed(i, j, &f) {
                    continue;
                }
                let name = format!("{ni}>{nj}{}", images(&f));
                b.morphism(name.clone(), ni.clone(), nj.clone());
                if i == j && f.iter().enumerate().all(|(t, &v)| t == v) {
                    b.identity(ni.clone(), name.clone());
                }
                by_key.insert((i, j, f.clone()), name);
                maps.push((i, j, f));
            }
        }
    }
    for (a, bb, f) in &maps {
        for (b2, c, g) in &maps {
            if b2 != bb {
                continue;
            }
            let h: Vec<usize> = f.iter().map(|&v| g[v]).collect();
            let name = |key: (usize, usize, Vec<usize>)| by_key[&key].clone();
            b.compose(
                name((*b2, *c, g.clone())),
                name((*a, *bb, f.clone())),
                name((*a, *c, h)),
            );
        }
    }
    b.build().expect("functions compose associatively")
}

/// Reflexive, transitive relations on `[n]`, one per isomorphism class.
/// Bit `i * n + j` records `i ≤ j`; the class representative has the least
/// mask, so the discrete order comes first.
fn preorders(n: usize) -> Vec<u32> {
    let perms = functions(n, n)
        .into_iter()
        .filter(|p| {
            let mut seen = vec![false; n];
            p.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
        })
        .collect::<Vec<_>>();
    let leq = |r: u32, i: usize, j: usize| r >> (i * n + j) & 1 == 1;
    let mut out = Vec::new();
    for r in 0..(1u32 << (n * n)) {
        let reflexive = (0..n).all(|i| leq(r, i, i));
        let transitive = (0..n).all(|i| {
            (0..n).all(|j| (0..n).all(|l| !(leq(r, i, j) && leq(r, j, l)) || leq(r, i, l)))
        });
        if !reflexive || !transitive {
            continue;
        }
        let canonical = perms.iter().all(|p| {
            let mut s = 0u32;
            for i in 0..n {
                for j in 0..n {
                    if leq(r, i, j) {
                        s |= 1 << (p[i] * n + p[j]);
                    }
                }
            }
            s >= r
        });
        if canonical {
            out.push(r);
        }
    }
    out
}

fn free_discrete_preorder(max: usize) -> (SpecDocument, Vec<Expectation>) {
    let sets: Vec<(String, usize)> = (0..=max).map(|n| (format!("S{n}"), n)).collect();
    let set = Arc::new(concrete_category(&sets, |_, _, _| true));

    let mut pre: Vec<(String, usize, u32)> = Vec::new();
    for n in 0..=max {
        for (k, r) in preorders(n).into_iter().enumerate() {
            let name = if k == 0 {
                format!("Disc{n}")
            } else {
                format!("Pre{n}_{k}")
            };
            pre.push((name, n, r));
        }
    }
    let pre_objs: Vec<(String, usize)> = pre.iter().map(|(s, n, _)| (s.clone(), *n)).collect();
    let preord = Arc::new(concrete_category(&pre_objs, |i, j, f| {
        let ((_, n, r), (_, m, s)) = (&pre[i], &pre[j]);
        (0..*n)
            .all(|a| (0..*n).all(|b| r >> (a * n + b) & 1 == 0 || s >> (f[a] * m + f[b]) & 1 == 1))
    }));

    // Het(S_i, P) = functions from i elements into the carrier of P.
    let mut hb = HetBuilder::new();
    let el = |i: usize, p: &str, f: &[usize]| format!("S{i}~{p}{}", images(f));
    for i in 0..=max {
        for (p, m, _) in &pre {
            for f in functions(i, *m) {
                hb.element(el(i, p, &f), format!("S{i}"), p.clone());
            }
        }
    }
    for i in 0..=max {
        for (p, m, _) in &pre {
            for d in functions(i, *m) {
                for &k in preord.outgoing(preord.object(p).expect("declared")) {
                    let (q, kmap) = parse_map(preord.morphism_name(k));
                    let v: Vec<usize> = d.iter().map(|&t| kmap[t]).collect();
                    hb.act_left(preord.morphism_name(k), el(i, p, &d), el(i, &q, &v));
                }
                for &h in set.incoming(set.object(&format!("S{i}")).expect("declared")) {
                    let src = set.dom(h).index();
                    let (_, hmap) = parse_map(set.morphism_name(h));
                    let v: Vec<usize> = hmap.iter().map(|&t| d[t]).collect();
                    hb.act_right(el(i, p, &d), set.morphism_name(h), el(src, p, &v));
                }
            }
        }
    }
    let fun = hb
        .build(set.clone(), preord.clone())
        .expect("pre- and post-composition act");

    let mut disc = FunctorBuilder::new();
    for i in 0..=max {
        disc.map_object(format!("S{i}"), format!("Disc{i}"));
    }
    for f in set.morphisms() {
        let (dom, cod) = (set.dom(f).index(), set.cod(f).index());
        let (_, imgs) = parse_map(set.morphism_name(f));
        disc.map_morphism(
            set.morphism_name(f),
            format!("Disc{dom}>Disc{cod}{}", images(&imgs)),
        );
    }
    let disc = disc
        .build(set.clone(), preord.clone())
        .expect("discrete preorders are functorial");
    let mut forget = FunctorBuilder::new();
    for (p, n, _) in &pre {
        forget.map_object(p.clone(), format!("S{n}"));
    }
    for f in preord.morphisms() {
        let (n, m) = (pre[preord.dom(f).index()].1, pre[preord.cod(f).index()].1);
        let (_, imgs) = parse_map(preord.morphism_name(f));
        forget.map_morphism(
            preord.morphism_name(f),
            format!("S{n}>S{m}{}", images(&imgs)),
        );
    }
    let forget = forget
        .build(preord.clone(), set.clone())
        .expect("forgetting is functorial");

    let mut doc = SpecDocument::new();
    add_cat(&mut doc, "Set", &set);
    add_cat(&mut doc, "Preord", &preord);
    doc.add_functor("disc", "Set", "Preord", disc)
        .expect("declared");
    doc.add_functor("forget", "Preord", "Set", forget)
        .expect("declared");
    doc.add_het("fun", "Set", "Preord", Arc::new(fun))
        .expect("declared");
    let ids = |i: usize| (0..i).collect::<Vec<_>>();
    let exp = vec![
        Expectation::Representation {
            het: "fun".into(),
            side: Side::Left,
            table: (0..=max)
                .map(|i| (format!("S{i}"), Some(format!("Disc{i}"))))
                .collect(),
            universals: Some(
                (0..=max)
                    .map(|i| el(i, &format!("Disc{i}"), &ids(i)))
                    .collect(),
            ),
        },
        Expectation::Semiadjunction {
            het: "fun".into(),
            side: Side::Left,
            functor: "disc".into(),
        },
        Expectation::Semiadjunction {
            het: "fun".into(),
            side: Side::Right,
            functor: "forget".into(),
        },
        Expectation::Adjunction { het: "fun".into() },
    ];
    (doc, exp)
}

/// Splits `Src>Dst[i,j,…]` into the target name and the image list.
fn parse_map(name: &str) -> (String, Vec<usize>) {
    let (head, imgs) = name.split_at(name.find('[').expect("map names carry images"));
    let target = head
        .split_once('>')
        .expect("map names carry an arrow")
        .1
        .to_string();
    let inner = &imgs[1..imgs.len() - 1];
    let v = if inner.is_empty() {
        Vec::new()
    } else {
        inner
            .split(',')
            .map(|s| s.parse().expect("numeric image"))
            .collect()
    };
    (target, v)
}

fn coordinate_coding(w: usize, h: usize) -> (SpecDocument, Vec<Expectation>) {
    let points: Vec<String> = (1..=w * h).map(|i| format!("P{i}")).collect();
    let codes: Vec<String> = (0..w * h)
        .map(|i| format!("({},{})", i % w, i / w))
        .collect();
    let pts = Arc::new(FinCategory::discrete(&points));
    let cds = Arc::new(FinCategory::discrete(&codes));
    let coord = FinFunctor::from_object_map(pts.clone(), cds.clone(), |x| x).expect("discrete");
    let mut out = HetBuilder::new();
    let mut inc = HetBuilder::new();
    for (p, c) in points.iter().zip(&codes) {
        out.element(format!("code_{p}"), p.clone(), c.clone());
        inc.element(format!("plot_{c}"), c.clone(), p.clone());
    }
    let code = out.build(pts.clone(), cds.clone()).expect("graph of a map");
    let plot = inc.build(cds.clone(), pts.clone()).expect("graph of a map");
    let mut doc = SpecDocument::new();
    add_cat(&mut doc, "Points", &pts);
    add_cat(&mut doc, "Codes", &cds);
    doc.add_functor("coord", "Points", "Codes", coord)
        .expect("declared");
    doc.add_het("code", "Points", "Codes", Arc::new(code))
        .expect("declared");
    doc.add_het("plot", "Codes", "Points", Arc::new(plot))
        .expect("declared");
    let exp = vec![
        Expectation::Semiadjunction {
            het: "code".into(),
            side: Side::Left,
            functor: "coord".into(),
        },
        Expectation::Semiadjunction {
            het: "plot".into(),
            side: Side::Right,
            functor: "coord".into(),
        },
        Expectation::Adjunction { het: "code".into() },
        Expectation::Brain {
            functor: "coord".into(),
            het_out: "code".into(),
            het_in: "plot".into(),
        },
    ];
    (doc, exp)
}

fn hom_identity(n: usize) -> (SpecDocument, Vec<Expectation>) {
    let c = Arc::new(FinCategory::chain(n));
    let mut doc = SpecDocument::new();
    add_cat(&mut doc, "C", &c);
    doc.add_functor("id", "C", "C", FinFunctor::identity(c.clone()))
        .expect("declared");
    doc.add_het("hom", "C", "C", Arc::new(hom_bifunctor(c.clone())))
        .expect("declared");
    let exp = vec![
        Expectation::Representation {
            het: "hom".into(),
            side: Side::Left,
            table: names(&c)
                .into_iter()
                .map(|x| (x.clone(), Some(x)))
                .collect(),
            universals: Some(names(&c).into_iter().map(|x| format!("id_{x}")).collect()),
        },
        Expectation::Semiadjunction {
            het: "hom".into(),
            side: Side::Left,
            functor: "id".into(),
        },
        Expectation::Semiadjunction {
            het: "hom".into(),
            side: Side::Right,
            functor: "id".into(),
        },
        Expectation::Adjunction { het: "hom".into() },
        Expectation::AdjointTriple {
            left: "id".into(),
            mid: "id".into(),
            right: "id".into(),
        },
    ];
    (doc, exp)
}

impl Fixture {
    /// Recomputes every expectation from scratch.
    pub fn check(&self) -> Vec<Outcome> {
        self.expectations
            .iter()
            .map(|e| {
                let detail = self.check_one(e);
                Outcome {
                    expectation: e.to_string(),
                    passed: detail.is_empty(),
                    detail,
                }
            })
            .collect()
    }

    fn check_one(&self, e: &Expectation) -> Vec<String> {
        let doc = &self.document;
        let missing = |what: &str, name: &str| vec![format!("fixture has no {what} `{name}`")];
        match e {
            Expectation::Representation {
                het,
                side,
                table,
                universals,
            } => {
                let Some(h) = doc.het(het) else {
                    return missing("het", het);
                };
                let (base_cat, rep_cat) = match side {
                    Side::Left => (h.sending(), h.receiving()),
                    Side::Right => (h.receiving(), h.sending()),
                };
                let mut detail = Vec::new();
                for (i, (base, rep)) in table.iter().enumerate() {
                    let Ok(x) = base_cat.object(base) else {
                        detail.push(format!("unknown base object {base}"));
                        continue;
                    };
                    let found = match side {
                        Side::Left => find_left_representation(h, x),
                        Side::Right => find_right_representation(h, x),
                    };
                    let got = found.map(|u| rep_cat.object_name(u.rep).to_string());
                    if &got != rep {
                        detail.push(format!("{base}: expected {rep:?}, found {got:?}"));
                    }
                    if let (Some(us), Some(u)) = (universals, found) {
                        if h.element_name(u.universal) != us[i] {
                            detail.push(format!(
                                "{base}: expected universal {}, found {}",
                                us[i],
                                h.element_name(u.universal)
                            ));
                        }
                    }
                }
                detail
            }
            Expectation::Semiadjunction { het, side, functor } => {
                let Some(h) = doc.het(het) else {
                    return missing("het", het);
                };
                let Some(f) = doc.functor(functor) else {
                    return missing("functor", functor);
                };
                let built = match side {
                    Side::Left => Semiadjunction::build_left(h.clone()),
                    Side::Right => Semiadjunction::build_right(h.clone()),
                };
                match built {
                    Ok(s) if s.functor() == f => Vec::new(),
                    Ok(s) => vec![format!(
                        "induced functor differs: {:?}",
                        s.functor().object_table()
                    )],
                    Err(r) => r.violations.iter().map(|v| v.to_string()).collect(),
                }
            }
            Expectation::Adjunction { het } => {
                let Some(h) = doc.het(het) else {
                    return missing("het", het);
                };
                match adjunction_for(h.clone()) {
                    Ok(_) => Vec::new(),
                    Err(r) => r.violations.iter().map(|v| v.to_string()).collect(),
                }
            }
            Expectation::Brain {
                functor,
                het_out,
                het_in,
            } => {
                let (Some(f), Some(o), Some(i)) =
                    (doc.functor(functor), doc.het(het_out), doc.het(het_in))
                else {
                    return vec!["fixture lacks a named part".into()];
                };
                match check_brain(f, o.clone(), i.clone()) {
                    Ok(_) => Vec::new(),
                    Err(r) => r.violations.iter().map(|v| v.to_string()).collect(),
                }
            }
            Expectation::AdjointTriple { left, mid, right } => {
                let (Some(h), Some(f), Some(g)) =
                    (doc.functor(left), doc.functor(mid), doc.functor(right))
                else {
                    return vec!["fixture lacks a named functor".into()];
                };
                match brain_from_adjoints(h, f, g) {
                    Ok(_) => Vec::new(),
                    Err(r) => r.violations.iter().map(|v| v.to_string()).collect(),
                }
            }
        }
    }

    /// Every adjunction the fixture expects, built by search.
    pub fn adjunctions(&self) -> Vec<(String, Adjunction)> {
        let mut out = Vec::new();
        for e in &self.expectations {
            match e {
                Expectation::Adjunction { het } => {
                    if let Some(adj) = self
                        .document
                        .het(het)
                        .and_then(|h| adjunction_for(h.clone()).ok())
                    {
                        out.push((het.clone(), adj));
                    }
                }
                Expectation::AdjointTriple { left, mid, right } => {
                    let doc = &self.document;
                    if let (Some(h), Some(f), Some(g)) =
                        (doc.functor(left), doc.functor(mid), doc.functor(right))
                    {
                        if let Ok(t) = brain_from_adjoints(h, f, g) {
                            out.push((format!("{left} -| {mid}"), t.lower));
                            out.push((format!("{mid} -| {right}"), t.upper));
                        }
                    }
                }
                _ => {}
            }
        }
        out
    }

    /// Every left and right semiadjunction available over the fixture's hets.
    pub fn semiadjunctions(&self) -> Vec<(String, Semiadjunction)> {
        let mut out = Vec::new();
        for item in self.document.items() {
            if let crate::cli::spec::Item::Het { name, het, .. } = item {
                if let Ok(s) = Semiadjunction::build_left(het.clone()) {
                    out.push((format!("{name} (left)"), s));
                }
                if let Ok(s) = Semiadjunction::build_right(het.clone()) {
                    out.push((format!("{name} (right)"), s));
                }
            }
        }
        out
    }
}

/// Builds both semiadjunctions of `het` by search and assembles them.
pub fn adjunction_for(
    het: Arc<crate::het::HetBifunctor>,
) -> std::result::Result<Adjunction, crate::ValidationReport> {
    let left = Semiadjunction::build_left(het.clone());
    let right = Semiadjunction::build_right(het);
    match (left, right) {
        (Ok(l), Ok(r)) => assemble_adjunction(l, r),
        (l, r) => {
            let mut report = crate::ValidationReport::new();
            for e in [l.err(), r.err()].into_iter().flatten() {
                report.extend(e);
            }
            Err(report)
        }
    }
}

/// Renders `d` as an instruction (the het itself) and as a selection
/// (its factorization `f(d)·h_X` through the receiving universal).
pub fn selection_report(semi: &Semiadjunction, d: El) -> Result<String> {
    if semi.side() != Side::Left {
        return Err(Error::Precondition(
            "selection reports need a left semiadjunction".into(),
        ));
    }
    let het = semi.het();
    if !het.contains(d) {
        return Err(Error::UnknownElement(format!("#{}", d.index())));
    }
    let (s, r) = (het.sending(), het.receiving());
    let x = het.src(d);
    let a = het.dst(d);
    let arrow = semi.arrow(x);
    let f = semi.factor(d)?;
    let (xn, an, fx) = (s.object_name(x), r.object_name(a), r.object_name(arrow.rep));
    let (dn, hn, fname) = (
        het.element_name(d),
        het.element_name(arrow.universal),
        r.morphism_name(f),
    );

    let mut out = String::new();
    let _ = writeln!(out, "instruction: {dn} : {xn} ~> {an}, taken directly");
    let _ = writeln!(out, "selection:   {dn} = {fname} . {hn}");
    let _ = writeln!(out, "  generator of diversity:     F({xn}) = {fx}");
    let _ = writeln!(
        out,
        "  polling (universal het):    h_{xn} = {hn} : {xn} ~> {fx}"
    );
    let _ = writeln!(out, "  differential amplification: {fname} : {fx} -> {an}");
    if r.is_identity(f) {
        let _ = writeln!(
            out,
            "  the amplification hom is the identity of {fx}: {dn} is the universal het itself"
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_default() -> Vec<Fixture> {
        FIXTURE_NAMES
            .iter()
            .map(|n| build_fixture(n, &[]).unwrap())
            .collect()
    }

    #[test]
    fn every_fixture_meets_its_expectations() {
        for fx in all_default() {
            for o in fx.check() {
                assert!(o.passed, "{}: {} {:?}", fx.name, o.expectation, o.detail);
            }
        }
    }

    #[test]
    fn parameters_are_checked() {
        assert!(matches!(
            build_fixture("nope", &[]),
            Err(GalleryError::UnknownFixture(_))
        ));
        assert!(matches!(
            build_fixture("powerset-diagonal", &[("k".into(), 4)]),
            Err(GalleryError::OutOfRange { .. })
        ));
        assert!(matches!(
            build_fixture("chain-galois", &[("q".into(), 1)]),
            Err(GalleryError::UnknownParameter { .. })
        ));
        assert_eq!(
            parse_params(&["n=3".into()]).unwrap(),
            [("n".to_string(), 3)]
        );
        assert!(parse_params(&["n3".into()]).is_err());
    }

    #[test]
    fn preorder_classes() {
        let counts: Vec<usize> = (0..=3).map(|n| preorders(n).len()).collect();
        assert_eq!(counts, [1, 1, 3, 9]);
    }

    #[test]
    fn construction_is_deterministic() {
        for name in FIXTURE_NAMES {
            assert_eq!(
                build_fixture(name, &[]).unwrap(),
                build_fixture(name, &[]).unwrap()
            );
        }
    }

    #[test]
    fn ceiling_selection_report() {
        let fx = build_fixture("chain-galois", &[]).unwrap();
        let het = fx.document.het("ceil").unwrap().clone();
        let semi = Semiadjunction::build_left(het.clone()).unwrap();
        let text = selection_report(&semi, het.element("u_3_2").unwrap()).unwrap();
        assert!(text.contains("F(3) = 2"));
        assert!(text.contains("h_3 = u_3_2"));
        assert!(text.contains("id_2 : 2 -> 2"));
        assert!(text.contains("identity of 2"));
        let text = selection_report(&semi, het.element("u_1_2").unwrap()).unwrap();
        assert!(text.contains("le_1_2"));
        assert!(!text.contains("identity of"));
    }

    #[test]
    fn insertion_is_the_polling_het() {
        let fx = build_fixture("free-discrete-preorder", &[]).unwrap();
        let het = fx.document.het("fun").unwrap().clone();
        let semi = Semiadjunction::build_left(het.clone()).unwrap();
        let text = selection_report(&semi, het.element("S2~Pre2_1[1,0]").unwrap()).unwrap();
        assert!(text.contains("h_S2 = S2~Disc2[0,1]"), "{text}");
        assert!(text.contains("Disc2>Pre2_1[1,0]"), "{text}");
    }
}
