//! Functors between finite categories, and the het bifunctors they induce.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{FinCategory, Mor, Obj};
use crate::het::{El, HetBifunctor, HetElement};
use crate::report::ValidationReport;

/// A validated functor given by its object and morphism tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinFunctor {
    source: Arc<FinCategory>,
    target: Arc<FinCategory>,
    obj_map: Vec<Obj>,
    mor_map: Vec<Mor>,
}

impl FinFunctor {
    /// Checks boundary, identity and composition preservation exhaustively.
    pub fn new(
        source: Arc<FinCategory>,
        target: Arc<FinCategory>,
        obj_map: Vec<Obj>,
        mor_map: Vec<Mor>,
    ) -> Result<FinFunctor, ValidationReport> {
        let mut report = ValidationReport::new();
        if obj_map.len() != source.object_count() {
            report.push(
                "object map is not total",
                [format!("{} of {}", obj_map.len(), source.object_count())],
            );
        }
        if mor_map.len() != source.morphism_count() {
            report.push(
                "morphism map is not total",
                [format!("{} of {}", mor_map.len(), source.morphism_count())],
            );
        }
        for (i, &y) in obj_map.iter().enumerate() {
            if !target.contains_object(y) {
                report.push("object image outside target", [source.object_name(Obj(i))]);
            }
        }
        for (i, &g) in mor_map.iter().enumerate() {
            if !target.contains_morphism(g) {
                report.push(
                    "morphism image outside target",
                    [source.morphism_name(Mor(i))],
                );
            }
        }
        if !report.ok() {
            return Err(report);
        }
        let (s, t) = (&*source, &*target);
        let fname = |f: Mor| s.morphism_name(f);
        for f in s.morphisms() {
            let g = mor_map[f.0];
            if t.dom(g) != obj_map[s.dom(f).0] {
                report.push("dom preservation", [fname(f), t.morphism_name(g)]);
            }
            if t.cod(g) != obj_map[s.cod(f).0] {
                report.push("cod preservation", [fname(f), t.morphism_name(g)]);
            }
        }
        for x in s.objects() {
            let id = s.identity(x);
            if mor_map[id.0] != t.identity(obj_map[x.0]) {
                report.push("identity preservation", [s.object_name(x), fname(id)]);
            }
        }
        for f in s.morphisms() {
            for &g in s.outgoing(s.cod(f)) {
                let (ff, fg) = (mor_map[f.0], mor_map[g.0]);
                let lhs = mor_map[s.comp_unchecked(g, f).0];
                let rhs = t.compose(fg, ff).ok();
                if rhs != Some(lhs) {
                    report.push("composition preservation", [fname(g), fname(f)]);
                }
            }
        }
        report.into_result(|| FinFunctor {
            source,
            target,
            obj_map,
            mor_map,
        })
    }

    pub fn identity(cat: Arc<FinCategory>) -> FinFunctor {
        FinFunctor {
            obj_map: cat.objects().collect(),
            mor_map: cat.morphisms().collect(),
            target: cat.clone(),
            source: cat,
        }
    }

    /// A functor determined by its object map alone, for targets where every
    /// needed hom-set is a singleton (preorders, in particular).
    pub fn from_object_map(
        source: Arc<FinCategory>,
        target: Arc<FinCategory>,
        on_objects: impl Fn(Obj) -> Obj,
    ) -> Result<FinFunctor, ValidationReport> {
        let obj_map: Vec<Obj> = source.objects().map(on_objects).collect();
        let mut report = ValidationReport::new();
        let mut mor_map = Vec::with_capacity(source.morphism_count());
        for f in source.morphisms() {
            let (a, b) = (obj_map[source.dom(f).0], obj_map[source.cod(f).0]);
            if !target.contains_object(a) || !target.contains_object(b) {
                report.push("object image outside target", [source.morphism_name(f)]);
                continue;
            }
            match target.hom_set(a, b) {
                [g] => mor_map.push(*g),
                _ => report.push("morphism image not forced", [source.morphism_name(f)]),
            }
        }
        if !report.ok() {
            return Err(report);
        }
        FinFunctor::new(source, target, obj_map, mor_map)
    }

    /// `Δ: C → C×C`, sending `x` to `(x,x)` and `f` to `(f,f)`.
    pub fn diagonal(cat: Arc<FinCategory>) -> FinFunctor {
        let product = Arc::new(FinCategory::product(&cat, &cat));
        let (n, m) = (cat.object_count(), cat.morphism_count());
        let obj_map = cat.objects().map(|x| Obj(x.0 * n + x.0)).collect();
        let mor_map = cat.morphisms().map(|f| Mor(f.0 * m + f.0)).collect();
        FinFunctor::new(cat, product, obj_map, mor_map).expect("the diagonal is a functor")
    }

    /// Constant functor at `value`.
    pub fn constant(source: Arc<FinCategory>, target: Arc<FinCategory>, value: Obj) -> FinFunctor {
        let id = target.identity(value);
        let obj_map = vec![value; source.object_count()];
        let mor_map = vec![id; source.morphism_count()];
        FinFunctor::new(source, target, obj_map, mor_map).expect("constant functors are functors")
    }

    pub fn source(&self) -> &Arc<FinCategory> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinCategory> {
        &self.target
    }

    pub fn obj(&self, x: Obj) -> Obj {
        self.obj_map[x.0]
    }

    pub fn mor(&self, f: Mor) -> Mor {
        self.mor_map[f.0]
    }

    pub fn apply(&self, f: Mor) -> Result<Mor> {
        self.mor_map
            .get(f.0)
            .copied()
            .ok_or_else(|| Error::UnknownMorphism(format!("#{}", f.0)))
    }

    /// Applies the functor to a source morphism given by name.
    pub fn apply_named(&self, f: &str) -> Result<&str> {
        let m = self.source.morphism(f)?;
        Ok(self.target.morphism_name(self.mor_map[m.0]))
    }

    pub fn obj_named(&self, x: &str) -> Result<&str> {
        let o = self.source.object(x)?;
        Ok(self.target.object_name(self.obj_map[o.0]))
    }

    fn injective_on_objects(&self) -> bool {
        let mut seen = vec![false; self.target.object_count()];
        self.obj_map
            .iter()
            .all(|y| !std::mem::replace(&mut seen[y.0], true))
    }

    /// `(source name, target name)` for every object.
    pub fn object_table(&self) -> Vec<(String, String)> {
        self.source
            .objects()
            .map(|x| {
                (
                    self.source.object_name(x).to_string(),
                    self.target.object_name(self.obj(x)).to_string(),
                )
            })
            .collect()
    }

    /// Whether the image of `f` could be omitted from a serialized form.
    pub(crate) fn mor_is_forced(&self, f: Mor) -> bool {
        let (s, t) = (&*self.source, &*self.target);
        let g = self.mor(f);
        (s.is_identity(f) && t.is_identity(g))
            || t.hom_set(self.obj(s.dom(f)), self.obj(s.cod(f))).len() == 1
    }
}

/// Name-level description of a functor.
///
/// Morphism images left undeclared are filled when forced: identities go to
/// identities and a singleton target hom-set supplies its only element.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FunctorBuilder {
    objects: Vec<(String, String)>,
    morphisms: Vec<(String, String)>,
}

impl FunctorBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_functor(functor: &FinFunctor) -> Self {
        let (s, t) = (functor.source(), functor.target());
        let mut b = FunctorBuilder::new();
        for x in s.objects() {
            b.map_object(s.object_name(x), t.object_name(functor.obj(x)));
        }
        for f in s.morphisms() {
            b.map_morphism(s.morphism_name(f), t.morphism_name(functor.mor(f)));
        }
        b
    }

    pub fn map_object(&mut self, x: impl Into<String>, y: impl Into<String>) -> &mut Self {
        self.objects.push((x.into(), y.into()));
        self
    }

    pub fn map_morphism(&mut self, f: impl Into<String>, g: impl Into<String>) -> &mut Self {
        self.morphisms.push((f.into(), g.into()));
        self
    }

    pub fn set_morphism(&mut self, f: &str, g: impl Into<String>) -> &mut Self {
        self.morphisms.retain(|(f2, _)| f2 != f);
        self.map_morphism(f, g)
    }

    pub fn build(
        &self,
        source: Arc<FinCategory>,
        target: Arc<FinCategory>,
    ) -> Result<FinFunctor, ValidationReport> {
        let mut report = ValidationReport::new();
        let mut obj_map: Vec<Option<Obj>> = vec![None; source.object_count()];
        for (x, y) in &self.objects {
            match (source.object(x), target.object(y)) {
                (Ok(xo), Ok(yo)) => {
                    if obj_map[xo.0].is_some_and(|prev| prev != yo) {
                        report.push("conflicting object image", [x.as_str()]);
                    }
                    obj_map[xo.0] = Some(yo);
                }
                _ => report.push("unknown object", [x.as_str(), y.as_str()]),
            }
        }
        let mut mor_map: Vec<Option<Mor>> = vec![None; source.morphism_count()];
        for (f, g) in &self.morphisms {
            match (source.morphism(f), target.morphism(g)) {
                (Ok(fm), Ok(gm)) => {
                    if mor_map[fm.0].is_some_and(|prev| prev != gm) {
                        report.push("conflicting morphism image", [f.as_str()]);
                    }
                    mor_map[fm.0] = Some(gm);
                }
                _ => report.push("unknown morphism", [f.as_str(), g.as_str()]),
            }
        }
        for x in source.objects() {
            if obj_map[x.0].is_none() {
                report.push("missing object image", [source.object_name(x)]);
            }
        }
        if !report.ok() {
            return Err(report);
        }
        let obj_map: Vec<Obj> = obj_map.into_iter().map(Option::unwrap).collect();
        for f in source.morphisms() {
            if mor_map[f.0].is_some() {
                continue;
            }
            let (a, b) = (obj_map[source.dom(f).0], obj_map[source.cod(f).0]);
            let forced = if source.is_identity(f) {
                Some(target.identity(a))
            } else {
                match target.hom_set(a, b) {
                    [g] => Some(*g),
                    _ => None,
                }
            };
            match forced {
                Some(g) => mor_map[f.0] = Some(g),
                None => report.push("missing morphism image", [source.morphism_name(f)]),
            }
        }
        if !report.ok() {
            return Err(report);
        }
        FinFunctor::new(
            source,
            target,
            obj_map,
            mor_map.into_iter().map(Option::unwrap).collect(),
        )
    }
}

/// `Hom: C^op × C → Set` as a het bifunctor from `C` to itself. Elements carry
/// the morphism names; both actions are composition.
pub fn hom_bifunctor(cat: Arc<FinCategory>) -> HetBifunctor {
    induced_het_left(&FinFunctor::identity(cat))
}

/// The het bifunctor `Het(X, A) := Hom_A(F(X), A)` that `F` represents on the
/// left by construction. `k·f = k ∘ f` and `f·h = f ∘ F(h)`.
///
/// Elements reuse the target morphism names. When `F` identifies objects the
/// same morphism appears in several het-sets, and the names become `f@X`.
pub fn induced_het_left(functor: &FinFunctor) -> HetBifunctor {
    let (s, t) = (functor.source().clone(), functor.target().clone());
    let qualify = !functor.injective_on_objects();
    let mut elements = Vec::new();
    let mut at: HashMap<(Obj, Mor), El> = HashMap::new();
    for x in s.objects() {
        for a in t.objects() {
            for &f in t.hom_set(functor.obj(x), a) {
                at.insert((x, f), El(elements.len()));
                elements.push(HetElement {
                    name: element_name(t.morphism_name(f), s.object_name(x), qualify),
                    src: x,
                    dst: a,
                });
            }
        }
    }
    let mut base = vec![(Obj(0), Mor(0)); elements.len()];
    for (&k, &v) in &at {
        base[v.0] = k;
    }
    HetBifunctor::from_tables(
        s.clone(),
        t.clone(),
        elements,
        |k, d| {
            let (x, f) = base[d.0];
            at.get(&(x, t.comp_unchecked(k, f))).copied()
        },
        |d, h| {
            let (_, f) = base[d.0];
            at.get(&(s.dom(h), t.comp_unchecked(f, functor.mor(h))))
                .copied()
        },
    )
    .expect("an induced het bifunctor satisfies the bifunctor laws")
}

/// The het bifunctor `Het(X, A) := Hom_X(X, G(A))` for `G: A → X`, which `G`
/// represents on the right by construction. Hets run from the target of `G`
/// to its source; `k·g = G(k) ∘ g` and `g·h = g ∘ h`.
pub fn induced_het_right(functor: &FinFunctor) -> HetBifunctor {
    let (recv, send) = (functor.source().clone(), functor.target().clone());
    let qualify = !functor.injective_on_objects();
    let mut elements = Vec::new();
    let mut at: HashMap<(Obj, Mor), El> = HashMap::new();
    for x in send.objects() {
        for a in recv.objects() {
            for &g in send.hom_set(x, functor.obj(a)) {
                at.insert((a, g), El(elements.len()));
                elements.push(HetElement {
                    name: element_name(send.morphism_name(g), recv.object_name(a), qualify),
                    src: x,
                    dst: a,
                });
            }
        }
    }
    let mut base = vec![(Obj(0), Mor(0)); elements.len()];
    for (&k, &v) in &at {
        base[v.0] = k;
    }
    HetBifunctor::from_tables(
        send.clone(),
        recv.clone(),
        elements,
        |k, d| {
            let (_, g) = base[d.0];
            at.get(&(recv.cod(k), send.comp_unchecked(functor.mor(k), g)))
                .copied()
        },
        |d, h| {
            let (a, g) = base[d.0];
            at.get(&(a, send.comp_unchecked(g, h))).copied()
        },
    )
    .expect("an induced het bifunctor satisfies the bifunctor laws")
}

fn element_name(morphism: &str, object: &str, qualify: bool) -> String {
    if qualify {
        format!("{morphism}@{object}")
    } else {
        morphism.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2() -> Arc<FinCategory> {
        Arc::new(FinCategory::powerset(2))
    }

    #[test]
    fn identity_functor_is_valid() {
        let c = Arc::new(FinCategory::chain(3));
        let id = FinFunctor::identity(c.clone());
        let rebuilt = FinFunctor::new(c.clone(), c.clone(), id.obj_map.clone(), id.mor_map.clone());
        assert_eq!(rebuilt.unwrap(), id);
        for f in c.morphisms() {
            assert_eq!(id.apply(f).unwrap(), f);
        }
    }

    #[test]
    fn diagonal_maps_pairs() {
        let d = FinFunctor::diagonal(p2());
        assert_eq!(
            d.apply_named("le_{1}_{1,2}").unwrap(),
            "(le_{1}_{1,2},le_{1}_{1,2})"
        );
        assert_eq!(d.obj_named("{2}").unwrap(), "({2},{2})");
        assert!(d.apply_named("(id_{},id_{})").is_err());
    }

    #[test]
    fn seeded_cod_violation() {
        let c = Arc::new(FinCategory::chain(3));
        let mut b = FunctorBuilder::from_functor(&FinFunctor::identity(c.clone()));
        b.set_morphism("le_0_1", "id_0");
        let report = b.build(c.clone(), c).unwrap_err();
        assert!(report
            .violations
            .iter()
            .any(|v| v.law == "cod preservation" && v.witness[0] == "le_0_1"));
    }

    #[test]
    fn hom_bifunctor_matches_hom_sets() {
        let c = Arc::new(FinCategory::chain(3));
        let hom = hom_bifunctor(c.clone());
        let d = hom.element("le_0_1").unwrap();
        let k = c.morphism("le_1_2").unwrap();
        assert_eq!(hom.element_name(hom.act_left(k, d).unwrap()), "le_0_2");
        let names: Vec<&str> = hom
            .het_set_named("0", "2")
            .unwrap()
            .iter()
            .map(|&e| hom.element_name(e))
            .collect();
        assert_eq!(names, ["le_0_2"]);
        assert_eq!(induced_het_right(&FinFunctor::identity(c.clone())), hom);
    }

    #[test]
    fn constant_functor_qualifies_names() {
        let c = Arc::new(FinCategory::chain(3));
        let k = FinFunctor::constant(c.clone(), c.clone(), c.object("0").unwrap());
        let het = induced_het_left(&k);
        assert!(het.element("id_0@1").is_ok());
        assert_eq!(het.het_set_named("2", "1").unwrap().len(), 1);
    }
}
