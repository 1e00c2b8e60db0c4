//! Finite categories stored as explicit, validated tables.
//!
//! Objects and morphisms are identified by name and ordered by declaration.
//! Composition is a total table over composable pairs. Every constructor goes
//! through [`CategoryBuilder::build`], which checks the identity, unit and
//! associativity laws exhaustively and reports every violation it finds.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::report::ValidationReport;

/// Position of an object within its category.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Obj(pub(crate) usize);

/// Position of a morphism within its category.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mor(pub(crate) usize);

impl Obj {
    pub fn index(self) -> usize {
        self.0
    }
}

impl Mor {
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct MorphismData {
    name: String,
    dom: Obj,
    cod: Obj,
}

/// Adjacency data derived from the object and morphism lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Shape {
    pub(crate) outgoing: Vec<Vec<Mor>>,
    pub(crate) incoming: Vec<Vec<Mor>>,
    /// Position of each morphism in `outgoing[dom]`.
    pub(crate) out_pos: Vec<usize>,
    /// Position of each morphism in `incoming[cod]`.
    pub(crate) in_pos: Vec<usize>,
    /// `hom[x * n + a]` lists the morphisms `x -> a` in declaration order.
    pub(crate) hom: Vec<Vec<Mor>>,
    pub(crate) hom_pos: Vec<usize>,
    /// Start of the row of composites `g . f` for each `f`, indexed by `out_pos[g]`.
    pub(crate) comp_offset: Vec<usize>,
    pub(crate) comp_len: usize,
}

impl Shape {
    fn new(n_objects: usize, ends: &[(Obj, Obj)]) -> Shape {
        let mut outgoing = vec![Vec::new(); n_objects];
        let mut incoming = vec![Vec::new(); n_objects];
        let mut hom = vec![Vec::new(); n_objects * n_objects];
        let mut out_pos = Vec::with_capacity(ends.len());
        let mut in_pos = Vec::with_capacity(ends.len());
        let mut hom_pos = Vec::with_capacity(ends.len());
        for (i, &(dom, cod)) in ends.iter().enumerate() {
            out_pos.push(outgoing[dom.0].len());
            outgoing[dom.0].push(Mor(i));
            in_pos.push(incoming[cod.0].len());
            incoming[cod.0].push(Mor(i));
            let cell = &mut hom[dom.0 * n_objects + cod.0];
            hom_pos.push(cell.len());
            cell.push(Mor(i));
        }
        let mut comp_offset = Vec::with_capacity(ends.len());
        let mut comp_len = 0;
        for &(_, cod) in ends {
            comp_offset.push(comp_len);
            comp_len += outgoing[cod.0].len();
        }
        Shape {
            outgoing,
            incoming,
            out_pos,
            in_pos,
            hom,
            hom_pos,
            comp_offset,
            comp_len,
        }
    }
}

/// A validated finite category.
///
/// Equality is structural: same ordered objects, same ordered morphisms with
/// the same boundaries, same identities and the same composition table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinCategory {
    objects: Vec<String>,
    morphisms: Vec<MorphismData>,
    identities: Vec<Mor>,
    comp: Vec<Mor>,
    shape: Shape,
    obj_index: HashMap<String, Obj>,
    mor_index: HashMap<String, Mor>,
}

impl FinCategory {
    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> impl ExactSizeIterator<Item = Obj> + Clone {
        (0..self.objects.len()).map(Obj)
    }

    pub fn morphisms(&self) -> impl ExactSizeIterator<Item = Mor> + Clone {
        (0..self.morphisms.len()).map(Mor)
    }

    pub fn object(&self, name: &str) -> Result<Obj> {
        self.obj_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownObject(name.to_string()))
    }

    pub fn morphism(&self, name: &str) -> Result<Mor> {
        self.mor_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownMorphism(name.to_string()))
    }

    pub fn object_name(&self, x: Obj) -> &str {
        &self.objects[x.0]
    }

    pub fn morphism_name(&self, f: Mor) -> &str {
        &self.morphisms[f.0].name
    }

    pub fn dom(&self, f: Mor) -> Obj {
        self.morphisms[f.0].dom
    }

    pub fn cod(&self, f: Mor) -> Obj {
        self.morphisms[f.0].cod
    }

    pub fn identity(&self, x: Obj) -> Mor {
        self.identities[x.0]
    }

    pub fn is_identity(&self, f: Mor) -> bool {
        self.identities[self.dom(f).0] == f
    }

    pub fn contains_object(&self, x: Obj) -> bool {
        x.0 < self.objects.len()
    }

    pub fn contains_morphism(&self, f: Mor) -> bool {
        f.0 < self.morphisms.len()
    }

    /// Morphisms out of `x`, in declaration order.
    pub fn outgoing(&self, x: Obj) -> &[Mor] {
        &self.shape.outgoing[x.0]
    }

    /// Morphisms into `x`, in declaration order.
    pub fn incoming(&self, x: Obj) -> &[Mor] {
        &self.shape.incoming[x.0]
    }

    /// All morphisms `x -> a` in declaration order.
    pub fn hom_set(&self, x: Obj, a: Obj) -> &[Mor] {
        &self.shape.hom[x.0 * self.objects.len() + a.0]
    }

    pub fn hom_set_named(&self, x: &str, a: &str) -> Result<&[Mor]> {
        Ok(self.hom_set(self.object(x)?, self.object(a)?))
    }

    /// Position of `f` inside `hom_set(dom f, cod f)`.
    pub fn hom_position(&self, f: Mor) -> usize {
        self.shape.hom_pos[f.0]
    }

    pub(crate) fn shape(&self) -> &Shape {
        &self.shape
    }

    /// `g . f`, defined when `cod f = dom g`.
    pub fn compose(&self, g: Mor, f: Mor) -> Result<Mor> {
        if self.cod(f) != self.dom(g) {
            return Err(Error::NotComposable {
                g: self.morphism_name(g).to_string(),
                f: self.morphism_name(f).to_string(),
                cod_f: self.object_name(self.cod(f)).to_string(),
                dom_g: self.object_name(self.dom(g)).to_string(),
            });
        }
        Ok(self.comp_unchecked(g, f))
    }

    pub fn compose_named(&self, g: &str, f: &str) -> Result<&str> {
        let h = self.compose(self.morphism(g)?, self.morphism(f)?)?;
        Ok(self.morphism_name(h))
    }

    /// `g . f` for a pair already known to be composable.
    #[inline]
    pub(crate) fn comp_unchecked(&self, g: Mor, f: Mor) -> Mor {
        self.comp[self.shape.comp_offset[f.0] + self.shape.out_pos[g.0]]
    }

    /// Same objects and morphisms with every arrow reversed.
    pub fn opposite(&self) -> FinCategory {
        let mut b = CategoryBuilder::new();
        b.objects(self.objects.iter().cloned());
        for m in &self.morphisms {
            b.morphism(&m.name, &self.objects[m.cod.0], &self.objects[m.dom.0]);
        }
        for x in self.objects() {
            b.identity(self.object_name(x), self.morphism_name(self.identity(x)));
        }
        for f in self.morphisms() {
            for &g in self.outgoing(self.cod(f)) {
                // op composite f ∘op g is g ∘ f
                b.compose(
                    self.morphism_name(f),
                    self.morphism_name(g),
                    self.morphism_name(self.comp_unchecked(g, f)),
                );
            }
        }
        b.build()
            .expect("the opposite of a valid category is valid")
    }

    /// Product category with componentwise structure. Objects are named
    /// `(x,a)` and morphisms `(f,k)`.
    pub fn product(left: &FinCategory, right: &FinCategory) -> FinCategory {
        let pair = |l: &str, r: &str| format!("({l},{r})");
        let mut b = CategoryBuilder::new();
        for x in left.objects() {
            for a in right.objects() {
                b.object(pair(left.object_name(x), right.object_name(a)));
            }
        }
        for f in left.morphisms() {
            for k in right.morphisms() {
                b.morphism(
                    pair(left.morphism_name(f), right.morphism_name(k)),
                    pair(
                        left.object_name(left.dom(f)),
                        right.object_name(right.dom(k)),
                    ),
                    pair(
                        left.object_name(left.cod(f)),
                        right.object_name(right.cod(k)),
                    ),
                );
            }
        }
        for x in left.objects() {
            for a in right.objects() {
                b.identity(
                    pair(left.object_name(x), right.object_name(a)),
                    pair(
                        left.morphism_name(left.identity(x)),
                        right.morphism_name(right.identity(a)),
                    ),
                );
            }
        }
        for f in left.morphisms() {
            for &g in left.outgoing(left.cod(f)) {
                let gf = left.comp_unchecked(g, f);
                for k in right.morphisms() {
                    for &l in right.outgoing(right.cod(k)) {
                        let lk = right.comp_unchecked(l, k);
                        b.compose(
                            pair(left.morphism_name(g), right.morphism_name(l)),
                            pair(left.morphism_name(f), right.morphism_name(k)),
                            pair(left.morphism_name(gf), right.morphism_name(lk)),
                        );
                    }
                }
            }
        }
        b.build().expect("the product of valid categories is valid")
    }

    /// The preorder on `names` given by `leq`, one morphism per related pair.
    ///
    /// Identities are named `id_x`, other morphisms `le_x_y`. The relation must
    /// be reflexive and transitive; otherwise the build reports the missing
    /// identities or composites.
    pub fn from_preorder<S: AsRef<str>>(
        names: &[S],
        leq: impl Fn(usize, usize) -> bool,
    ) -> Result<FinCategory, ValidationReport> {
        let mut b = CategoryBuilder::new();
        b.objects(names.iter().map(|s| s.as_ref().to_string()));
        for (i, x) in names.iter().enumerate() {
            for (j, a) in names.iter().enumerate() {
                if !leq(i, j) {
                    continue;
                }
                let (x, a) = (x.as_ref(), a.as_ref());
                if i == j {
                    b.morphism(format!("id_{x}"), x, x);
                    b.identity(x, format!("id_{x}"));
                } else {
                    b.morphism(format!("le_{x}_{a}"), x, a);
                }
            }
        }
        b.build()
    }

    /// The chain `0 ≤ 1 ≤ … ≤ count-1`.
    pub fn chain(count: usize) -> FinCategory {
        let names: Vec<String> = (0..count).map(|i| i.to_string()).collect();
        Self::from_preorder(&names, |i, j| i <= j).expect("chains are categories")
    }

    /// Subsets of `{1,…,k}` ordered by inclusion. The object at index `mask`
    /// is the subset whose bits are set in `mask`.
    pub fn powerset(k: usize) -> FinCategory {
        let names: Vec<String> = (0..1usize << k).map(|m| subset_name(m, k)).collect();
        Self::from_preorder(&names, |i, j| i & j == i).expect("powersets are categories")
    }

    /// Objects with identities only.
    pub fn discrete<S: AsRef<str>>(names: &[S]) -> FinCategory {
        Self::from_preorder(names, |i, j| i == j).expect("discrete categories are categories")
    }
}

/// `{1,3}`-style name of the subset encoded by `mask`.
pub fn subset_name(mask: usize, k: usize) -> String {
    let members: Vec<String> = (0..k)
        .filter(|b| mask & (1 << b) != 0)
        .map(|b| (b + 1).to_string())
        .collect();
    format!("{{{}}}", members.join(","))
}

/// Name-level description of a category, validated by [`build`](Self::build).
///
/// Composites that are not listed are filled in when they are forced: a
/// composite with an identity defaults to the other factor, and a composite
/// whose hom-set is a singleton defaults to its only element. Anything else
/// that is missing is reported.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CategoryBuilder {
    objects: Vec<String>,
    morphisms: Vec<(String, String, String)>,
    identities: Vec<(String, String)>,
    compositions: Vec<(String, String, String)>,
}

impl CategoryBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Every entry of `cat`, including all composites, spelled out.
    pub fn from_category(cat: &FinCategory) -> Self {
        let mut b = CategoryBuilder::new();
        b.objects(cat.objects.iter().cloned());
        for m in &cat.morphisms {
            b.morphism(&m.name, cat.object_name(m.dom), cat.object_name(m.cod));
        }
        for x in cat.objects() {
            b.identity(cat.object_name(x), cat.morphism_name(cat.identity(x)));
        }
        for f in cat.morphisms() {
            for &g in cat.outgoing(cat.cod(f)) {
                b.compose(
                    cat.morphism_name(g),
                    cat.morphism_name(f),
                    cat.morphism_name(cat.comp_unchecked(g, f)),
                );
            }
        }
        b
    }

    pub fn object(&mut self, name: impl Into<String>) -> &mut Self {
        self.objects.push(name.into());
        self
    }

    pub fn objects<I, S>(&mut self, names: I) -> &mut Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.objects.extend(names.into_iter().map(Into::into));
        self
    }

    pub fn morphism(
        &mut self,
        name: impl Into<String>,
        dom: impl Into<String>,
        cod: impl Into<String>,
    ) -> &mut Self {
        self.morphisms.push((name.into(), dom.into(), cod.into()));
        self
    }

    pub fn identity(
        &mut self,
        object: impl Into<String>,
        morphism: impl Into<String>,
    ) -> &mut Self {
        self.identities.push((object.into(), morphism.into()));
        self
    }

    /// Declares `g . f = h`.
    pub fn compose(
        &mut self,
        g: impl Into<String>,
        f: impl Into<String>,
        h: impl Into<String>,
    ) -> &mut Self {
        self.compositions.push((g.into(), f.into(), h.into()));
        self
    }

    /// Replaces every declared entry for `g . f` with `h`.
    pub fn set_compose(&mut self, g: &str, f: &str, h: impl Into<String>) -> &mut Self {
        self.compositions
            .retain(|(g2, f2, _)| !(g2 == g && f2 == f));
        self.compose(g, f, h)
    }

    pub fn remove_identity(&mut self, object: &str) -> &mut Self {
        self.identities.retain(|(x, _)| x != object);
        self
    }

    pub fn declared_objects(&self) -> &[String] {
        &self.objects
    }

    pub fn declared_morphisms(&self) -> &[(String, String, String)] {
        &self.morphisms
    }

    pub fn declared_compositions(&self) -> &[(String, String, String)] {
        &self.compositions
    }

    pub fn build(&self) -> Result<FinCategory, ValidationReport> {
        let mut report = ValidationReport::new();

        let mut obj_index = HashMap::with_capacity(self.objects.len());
        for (i, name) in self.objects.iter().enumerate() {
            if obj_index.insert(name.clone(), Obj(i)).is_some() {
                report.push("duplicate object", [name.as_str()]);
            }
        }
        let mut mor_index = HashMap::with_capacity(self.morphisms.len());
        let mut morphisms = Vec::with_capacity(self.morphisms.len());
        for (i, (name, dom, cod)) in self.morphisms.iter().enumerate() {
            if mor_index.insert(name.clone(), Mor(i)).is_some() {
                report.push("duplicate morphism", [name.as_str()]);
            }
            match (obj_index.get(dom), obj_index.get(cod)) {
                (Some(&dom), Some(&cod)) => morphisms.push(MorphismData {
                    name: name.clone(),
                    dom,
                    cod,
                }),
                _ => report.push(
                    "unknown object",
                    [name.as_str(), dom.as_str(), cod.as_str()],
                ),
            }
        }
        if !report.ok() {
            return Err(report);
        }

        let ends: Vec<(Obj, Obj)> = morphisms.iter().map(|m| (m.dom, m.cod)).collect();
        let shape = Shape::new(self.objects.len(), &ends);

        let mut identities: Vec<Option<Mor>> = vec![None; self.objects.len()];
        for (x, f) in &self.identities {
            let (Some(&xo), Some(&fm)) = (obj_index.get(x), mor_index.get(f)) else {
                report.push("unknown identity reference", [x.as_str(), f.as_str()]);
                continue;
            };
            if let Some(prev) = identities[xo.0] {
                if prev != fm {
                    report.push("duplicate identity", [x.as_str(), f.as_str()]);
                }
                continue;
            }
            if ends[fm.0] != (xo, xo) {
                report.push(
                    "identity is not an endomorphism of its object",
                    [x.as_str(), f.as_str()],
                );
            }
            identities[xo.0] = Some(fm);
        }
        for (i, id) in identities.iter().enumerate() {
            if id.is_none() {
                report.push("missing identity", [self.objects[i].as_str()]);
            }
        }

        let name = |m: Mor| morphisms[m.0].name.as_str();
        let mut comp: Vec<Option<Mor>> = vec![None; shape.comp_len];
        let slot = |g: Mor, f: Mor| shape.comp_offset[f.0] + shape.out_pos[g.0];
        for (g, f, h) in &self.compositions {
            let (Some(&gm), Some(&fm), Some(&hm)) =
                (mor_index.get(g), mor_index.get(f), mor_index.get(h))
            else {
                report.push(
                    "unknown morphism in composition",
                    [g.as_str(), f.as_str(), h.as_str()],
                );
                continue;
            };
            if ends[fm.0].1 != ends[gm.0].0 {
                report.push("not composable", [g.as_str(), f.as_str()]);
                continue;
            }
            let s = slot(gm, fm);
            match comp[s] {
                Some(prev) if prev != hm => {
                    report.push(
                        "conflicting composition",
                        [g.as_str(), f.as_str(), name(prev), h.as_str()],
                    );
                    continue;
                }
                _ => {}
            }
            if ends[hm.0].0 != ends[fm.0].0 {
                report.push("dom mismatch", [g.as_str(), f.as_str(), h.as_str()]);
            }
            if ends[hm.0].1 != ends[gm.0].1 {
                report.push("cod mismatch", [g.as_str(), f.as_str(), h.as_str()]);
            }
            comp[s] = Some(hm);
        }

        // forced entries
        let n = self.objects.len();
        for f in 0..morphisms.len() {
            let fm = Mor(f);
            let (dom_f, cod_f) = ends[f];
            for &gm in &shape.outgoing[cod_f.0] {
                let s = slot(gm, fm);
                if comp[s].is_some() {
                    continue;
                }
                let cod_g = ends[gm.0].1;
                let forced = if identities[dom_f.0] == Some(fm) {
                    Some(gm)
                } else if identities[cod_f.0] == Some(gm) {
                    Some(fm)
                } else if shape.hom[dom_f.0 * n + cod_g.0].len() == 1 {
                    Some(shape.hom[dom_f.0 * n + cod_g.0][0])
                } else {
                    None
                };
                match forced {
                    Some(h) => comp[s] = Some(h),
                    None => report.push("missing composition", [name(gm), name(fm)]),
                }
            }
        }

        let lookup = |g: Mor, f: Mor| -> Option<Mor> {
            if ends[f.0].1 != ends[g.0].0 {
                return None;
            }
            comp[slot(g, f)]
        };

        // unit laws
        for f in 0..morphisms.len() {
            let fm = Mor(f);
            let (dom_f, cod_f) = ends[f];
            if let Some(id) = identities[dom_f.0] {
                if ends[id.0] == (dom_f, dom_f) && lookup(fm, id) != Some(fm) {
                    report.push("unit law", [name(fm), name(id)]);
                }
            }
            if let Some(id) = identities[cod_f.0] {
                if ends[id.0] == (cod_f, cod_f) && lookup(id, fm) != Some(fm) {
                    report.push("unit law", [name(id), name(fm)]);
                }
            }
        }

        // associativity over every composable triple
        for f in 0..morphisms.len() {
            let fm = Mor(f);
            for &gm in &shape.outgoing[ends[f].1 .0] {
                let Some(gf) = comp[slot(gm, fm)] else {
                    continue;
                };
                for &hm in &shape.outgoing[ends[gm.0].1 .0] {
                    let Some(hg) = comp[slot(hm, gm)] else {
                        continue;
                    };
                    let lhs = lookup(hm, gf);
                    let rhs = lookup(hg, fm);
                    if lhs.is_none() || lhs != rhs {
                        report.push("associativity", [name(hm), name(gm), name(fm)]);
                    }
                }
            }
        }

        if !report.ok() {
            return Err(report);
        }
        Ok(FinCategory {
            objects: self.objects.clone(),
            identities: identities.into_iter().map(Option::unwrap).collect(),
            comp: comp.into_iter().map(Option::unwrap).collect(),
            morphisms,
            shape,
            obj_index,
            mor_index,
        })
    }
}
