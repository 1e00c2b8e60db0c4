//! Brute-force oracles and mutation generators shared by the integration tests.
//!
//! The oracles use only the public API and never call into `represent`.

#![allow(dead_code)]

use std::sync::Arc;

use hetcat::fincat::CategoryBuilder;
use hetcat::functor::FunctorBuilder;
use hetcat::{El, FinCategory, FinFunctor, HetBifunctor, HetBuilder, Mor, Obj};

/// For the relation `x ⇢ a iff rel(x, a)` between chains `0..=n` and
/// `0..=m`: the `a0` with `rel(x, a) ⇔ a0 ≤ a` for every `a`, if any.
pub fn upset_left(n: usize, m: usize, rel: impl Fn(usize, usize) -> bool) -> Vec<Option<usize>> {
    (0..=n)
        .map(|x| (0..=m).find(|&a0| (0..=m).all(|a| rel(x, a) == (a0 <= a))))
        .collect()
}

/// The `x0` with `rel(x, a) ⇔ x ≤ x0` for every `x`, if any.
pub fn downset_right(n: usize, m: usize, rel: impl Fn(usize, usize) -> bool) -> Vec<Option<usize>> {
    (0..=m)
        .map(|a| (0..=n).find(|&x0| (0..=n).all(|x| rel(x, a) == (x <= x0))))
        .collect()
}

/// Every `(r, u)` with `u: x ⇢ r` such that `f ↦ f·u` is a bijection
/// `Hom(r, A) → Het(x, A)` for all `A`, checked by listing both sides.
pub fn brute_left_universals(het: &HetBifunctor, x: Obj) -> Vec<(Obj, El)> {
    let recv = het.receiving();
    let mut out = Vec::new();
    for r in recv.objects() {
        for &u in het.het_set(x, r) {
            let ok = recv.objects().all(|a| {
                let mut images: Vec<El> = recv
                    .hom_set(r, a)
                    .iter()
                    .map(|&f| het.act_left(f, u).unwrap())
                    .collect();
                images.sort();
                let mut target = het.het_set(x, a).to_vec();
                target.sort();
                let before = images.len();
                images.dedup();
                before == images.len() && images == target
            });
            if ok {
                out.push((r, u));
            }
        }
    }
    out
}

/// Every `(r, e)` with `e: r ⇢ a` such that `g ↦ e·g` is a bijection
/// `Hom(X, r) → Het(X, a)` for all `X`.
pub fn brute_right_universals(het: &HetBifunctor, a: Obj) -> Vec<(Obj, El)> {
    let send = het.sending();
    let mut out = Vec::new();
    for r in send.objects() {
        for &e in het.het_set(r, a) {
            let ok = send.objects().all(|x| {
                let mut images: Vec<El> = send
                    .hom_set(x, r)
                    .iter()
                    .map(|&g| het.act_right(e, g).unwrap())
                    .collect();
                images.sort();
                let mut target = het.het_set(x, a).to_vec();
                target.sort();
                let before = images.len();
                images.dedup();
                before == images.len() && images == target
            });
            if ok {
                out.push((r, e));
            }
        }
    }
    out
}

/// All homs `f: from → to` with `f·u = d`.
pub fn left_factors(het: &HetBifunctor, u: El, d: El) -> Vec<Mor> {
    let recv = het.receiving();
    recv.hom_set(het.dst(u), het.dst(d))
        .iter()
        .copied()
        .filter(|&f| het.act_left(f, u) == Ok(d))
        .collect()
}

/// All homs `g` with `e·g = d`.
pub fn right_factors(het: &HetBifunctor, e: El, d: El) -> Vec<Mor> {
    let send = het.sending();
    send.hom_set(het.src(d), het.src(e))
        .iter()
        .copied()
        .filter(|&g| het.act_right(e, g) == Ok(d))
        .collect()
}

/// The ceiling het `x ≤ 2a` between chains `0..=n` and `0..=m`, built from
/// relation lines without the gallery.
pub fn ceiling(n: usize, m: usize) -> HetBifunctor {
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
    b.build(x, a).unwrap()
}

/// A value other than `current` from `pool`, chosen by rotating `salt`.
fn other<'a>(pool: &'a [String], current: &str, salt: usize) -> Option<&'a String> {
    (0..pool.len())
        .map(|i| &pool[(i + salt) % pool.len()])
        .find(|s| s.as_str() != current)
}

/// One mutated builder per composable pair: its composite replaced by some
/// other morphism.
pub fn category_mutations(cat: &FinCategory) -> Vec<(String, CategoryBuilder)> {
    let names: Vec<String> = cat
        .morphisms()
        .map(|f| cat.morphism_name(f).to_string())
        .collect();
    let base = CategoryBuilder::from_category(cat);
    let mut out = Vec::new();
    for f in cat.morphisms() {
        for &g in cat.outgoing(cat.cod(f)) {
            let h = cat.compose(g, f).unwrap();
            let salt = f.index() * 7 + g.index();
            let same: Vec<String> = cat
                .hom_set(cat.dom(f), cat.cod(g))
                .iter()
                .map(|&m| cat.morphism_name(m).to_string())
                .collect();
            let Some(wrong) = other(&same, cat.morphism_name(h), salt)
                .or_else(|| other(&names, cat.morphism_name(h), salt))
            else {
                continue;
            };
            let mut b = base.clone();
            b.set_compose(cat.morphism_name(g), cat.morphism_name(f), wrong.clone());
            out.push((
                format!(
                    "{} . {} := {wrong}",
                    cat.morphism_name(g),
                    cat.morphism_name(f)
                ),
                b,
            ));
        }
    }
    out
}

/// One mutated builder per morphism: its image replaced by another morphism.
pub fn functor_mutations(f: &FinFunctor) -> Vec<(String, FunctorBuilder)> {
    let (s, t) = (f.source(), f.target());
    let names: Vec<String> = t
        .morphisms()
        .map(|g| t.morphism_name(g).to_string())
        .collect();
    let base = FunctorBuilder::from_functor(f);
    let mut out = Vec::new();
    for m in s.morphisms() {
        let Some(wrong) = other(&names, t.morphism_name(f.mor(m)), m.index() * 3 + 1) else {
            continue;
        };
        let mut b = base.clone();
        b.set_morphism(s.morphism_name(m), wrong.clone());
        out.push((format!("{} := {wrong}", s.morphism_name(m)), b));
    }
    out
}

/// One mutated builder per action entry, left and right.
pub fn het_mutations(het: &HetBifunctor) -> Vec<(String, HetBuilder)> {
    let (s, r) = (het.sending(), het.receiving());
    let names: Vec<String> = het
        .elements()
        .map(|d| het.element_name(d).to_string())
        .collect();
    let base = HetBuilder::from_het(het);
    let mut out = Vec::new();
    for d in het.elements() {
        let dn = het.element_name(d);
        for &k in r.outgoing(het.dst(d)) {
            let v = het.act_left(k, d).unwrap();
            // prefer a wrong value inside the same het-set when there is one
            let same: Vec<String> = het
                .het_set(het.src(v), het.dst(v))
                .iter()
                .map(|&e| het.element_name(e).to_string())
                .collect();
            let salt = d.index() + k.index();
            let Some(wrong) = other(&same, het.element_name(v), salt)
                .or_else(|| other(&names, het.element_name(v), salt))
            else {
                continue;
            };
            let mut b = base.clone();
            b.set_left(r.morphism_name(k), dn, wrong.clone());
            out.push((format!("{} . {dn} := {wrong}", r.morphism_name(k)), b));
        }
        for &h in s.incoming(het.src(d)) {
            let v = het.act_right(d, h).unwrap();
            let same: Vec<String> = het
                .het_set(het.src(v), het.dst(v))
                .iter()
                .map(|&e| het.element_name(e).to_string())
                .collect();
            let salt = d.index() + h.index();
            let Some(wrong) = other(&same, het.element_name(v), salt)
                .or_else(|| other(&names, het.element_name(v), salt))
            else {
                continue;
            };
            let mut b = base.clone();
            b.set_right(dn, s.morphism_name(h), wrong.clone());
            out.push((format!("{dn} . {} := {wrong}", s.morphism_name(h)), b));
        }
    }
    out
}

/// Runs the CLI in-process.
pub fn run_cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["hetcat"];
    argv.extend_from_slice(args);
    let code = hetcat::cli::execute(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

pub fn fixture_path(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

pub const SPEC_FILES: [&str; 6] = [
    "chain.spec",
    "truncated.spec",
    "powerset.spec",
    "coordinate.spec",
    "free.spec",
    "broken.spec",
];

/// Writes `text` to a fresh file under the system temp directory.
pub fn temp_spec(tag: &str, text: &str) -> String {
    let dir = std::env::temp_dir().join(format!("hetcat-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(format!("{tag}.spec"));
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}
