//! Heteromorphism bifunctors over finite categories.
//!
//! A het `d: X ⇢ A` runs from an object of the sending category to an object
//! of the receiving category. Homs act on hets from both sides: a receiving
//! hom `k: A → A'` gives `k·d: X ⇢ A'`, a sending hom `h: X' → X` gives
//! `d·h: X' ⇢ A`. There is deliberately no het-het composition.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{FinCategory, Mor, Obj};
use crate::report::ValidationReport;

/// Position of a het element within its bifunctor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct El(pub(crate) usize);

impl El {
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HetElement {
    pub name: String,
    /// Object of the sending category.
    pub src: Obj,
    /// Object of the receiving category.
    pub dst: Obj,
}

/// A validated bifunctor `Het: X^op × A → Set` with finite het-sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HetBifunctor {
    sending: Arc<FinCategory>,
    receiving: Arc<FinCategory>,
    elements: Vec<HetElement>,
    sets: Vec<Vec<El>>,
    set_pos: Vec<usize>,
    left: Vec<El>,
    left_offset: Vec<usize>,
    right: Vec<El>,
    right_offset: Vec<usize>,
    index: HashMap<String, El>,
}

impl HetBifunctor {
    /// Assembles a bifunctor from its elements and action functions.
    ///
    /// Actions returning `None` are filled when forced: identity homs act
    /// trivially, and an action into a singleton het-set lands on its only
    /// element. The result is checked against all four bifunctor laws.
    pub fn from_tables(
        sending: Arc<FinCategory>,
        receiving: Arc<FinCategory>,
        elements: Vec<HetElement>,
        mut left_of: impl FnMut(Mor, El) -> Option<El>,
        mut right_of: impl FnMut(El, Mor) -> Option<El>,
    ) -> Result<HetBifunctor, ValidationReport> {
        let mut report = ValidationReport::new();
        let n_recv = receiving.object_count();
        let mut index = HashMap::with_capacity(elements.len());
        let mut sets = vec![Vec::new(); sending.object_count() * n_recv];
        let mut set_pos = Vec::with_capacity(elements.len());
        for (i, e) in elements.iter().enumerate() {
            if !sending.contains_object(e.src) || !receiving.contains_object(e.dst) {
                report.push("element outside the categories", [e.name.as_str()]);
                continue;
            }
            if index.insert(e.name.clone(), El(i)).is_some() {
                report.push("duplicate het element", [e.name.as_str()]);
            }
            let cell = &mut sets[e.src.0 * n_recv + e.dst.0];
            set_pos.push(cell.len());
            cell.push(El(i));
        }
        if !report.ok() {
            return Err(report);
        }

        let rs = receiving.shape();
        let ss = sending.shape();
        let set_of = |x: Obj, a: Obj| &sets[x.0 * n_recv + a.0];
        let ename = |d: El| elements[d.0].name.as_str();

        let mut left_offset = Vec::with_capacity(elements.len());
        let mut right_offset = Vec::with_capacity(elements.len());
        let (mut nl, mut nr) = (0, 0);
        for e in &elements {
            left_offset.push(nl);
            nl += rs.outgoing[e.dst.0].len();
            right_offset.push(nr);
            nr += ss.incoming[e.src.0].len();
        }

        let mut left: Vec<Option<El>> = Vec::with_capacity(nl);
        for (i, e) in elements.iter().enumerate() {
            for &k in &rs.outgoing[e.dst.0] {
                let v = left_of(k, El(i)).or_else(|| {
                    if receiving.is_identity(k) {
                        Some(El(i))
                    } else {
                        let target = set_of(e.src, receiving.cod(k));
                        (target.len() == 1).then(|| target[0])
                    }
                });
                match v {
                    Some(v) if v.0 >= elements.len() => {
                        report.push(
                            "unknown action value",
                            [receiving.morphism_name(k), ename(El(i))],
                        );
                    }
                    None => report.push(
                        "missing left action",
                        [receiving.morphism_name(k), ename(El(i))],
                    ),
                    Some(v) => {
                        let w = &elements[v.0];
                        if w.src != e.src || w.dst != receiving.cod(k) {
                            report.push(
                                "action lands outside its het-set",
                                [receiving.morphism_name(k), ename(El(i)), w.name.as_str()],
                            );
                        }
                    }
                }
                left.push(v);
            }
        }
        let mut right: Vec<Option<El>> = Vec::with_capacity(nr);
        for (i, e) in elements.iter().enumerate() {
            for &h in &ss.incoming[e.src.0] {
                let v = right_of(El(i), h).or_else(|| {
                    if sending.is_identity(h) {
                        Some(El(i))
                    } else {
                        let target = set_of(sending.dom(h), e.dst);
                        (target.len() == 1).then(|| target[0])
                    }
                });
                match v {
                    Some(v) if v.0 >= elements.len() => {
                        report.push(
                            "unknown action value",
                            [ename(El(i)), sending.morphism_name(h)],
                        );
                    }
                    None => report.push(
                        "missing right action",
                        [ename(El(i)), sending.morphism_name(h)],
                    ),
                    Some(v) => {
                        let w = &elements[v.0];
                        if w.src != sending.dom(h) || w.dst != e.dst {
                            report.push(
                                "action lands outside its het-set",
                                [ename(El(i)), sending.morphism_name(h), w.name.as_str()],
                            );
                        }
                    }
                }
                right.push(v);
            }
        }
        if !report.ok() {
            return Err(report);
        }
        let het = HetBifunctor {
            sending,
            receiving,
            elements,
            sets,
            set_pos,
            left: left.into_iter().map(Option::unwrap).collect(),
            left_offset,
            right: right.into_iter().map(Option::unwrap).collect(),
            right_offset,
            index,
        };
        let laws = het.check_laws();
        laws.into_result(|| het)
    }

    fn check_laws(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        let (s, r) = (&*self.sending, &*self.receiving);
        for d in self.elements() {
            let e = &self.elements[d.0];
            let dn = e.name.as_str();
            if self.left_unchecked(r.identity(e.dst), d) != d {
                report.push(
                    "left identity action",
                    [r.morphism_name(r.identity(e.dst)), dn],
                );
            }
            if self.right_unchecked(d, s.identity(e.src)) != d {
                report.push(
                    "right identity action",
                    [dn, s.morphism_name(s.identity(e.src))],
                );
            }
            for &k in r.outgoing(e.dst) {
                let kd = self.left_unchecked(k, d);
                for &k2 in r.outgoing(r.cod(k)) {
                    let k2k = r.comp_unchecked(k2, k);
                    if self.left_unchecked(k2k, d) != self.left_unchecked(k2, kd) {
                        report.push(
                            "left action functoriality",
                            [r.morphism_name(k2), r.morphism_name(k), dn],
                        );
                    }
                }
            }
            for &h in s.incoming(e.src) {
                let dh = self.right_unchecked(d, h);
                for &h2 in s.incoming(s.dom(h)) {
                    let hh2 = s.comp_unchecked(h, h2);
                    if self.right_unchecked(d, hh2) != self.right_unchecked(dh, h2) {
                        report.push(
                            "right action functoriality",
                            [dn, s.morphism_name(h), s.morphism_name(h2)],
                        );
                    }
                }
            }
            for &k in r.outgoing(e.dst) {
                let kd = self.left_unchecked(k, d);
                for &h in s.incoming(e.src) {
                    let lhs = self.right_unchecked(kd, h);
                    let rhs = self.left_unchecked(k, self.right_unchecked(d, h));
                    if lhs != rhs {
                        report.push("(kd)h=k(dh)", [r.morphism_name(k), dn, s.morphism_name(h)]);
                    }
                }
            }
        }
        report
    }

    pub fn sending(&self) -> &Arc<FinCategory> {
        &self.sending
    }

    pub fn receiving(&self) -> &Arc<FinCategory> {
        &self.receiving
    }

    pub fn element_count(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> impl ExactSizeIterator<Item = El> + Clone {
        (0..self.elements.len()).map(El)
    }

    pub fn element(&self, name: &str) -> Result<El> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn element_data(&self, d: El) -> &HetElement {
        &self.elements[d.0]
    }

    pub fn element_name(&self, d: El) -> &str {
        &self.elements[d.0].name
    }

    pub fn contains(&self, d: El) -> bool {
        d.0 < self.elements.len()
    }

    /// Sending-side object the het starts from.
    pub fn src(&self, d: El) -> Obj {
        self.elements[d.0].src
    }

    /// Receiving-side object the het lands in.
    pub fn dst(&self, d: El) -> Obj {
        self.elements[d.0].dst
    }

    /// `Het(x, a)` in declaration order.
    pub fn het_set(&self, x: Obj, a: Obj) -> &[El] {
        &self.sets[x.0 * self.receiving.object_count() + a.0]
    }

    pub fn het_set_named(&self, x: &str, a: &str) -> Result<&[El]> {
        Ok(self.het_set(self.sending.object(x)?, self.receiving.object(a)?))
    }

    pub fn set_position(&self, d: El) -> usize {
        self.set_pos[d.0]
    }

    /// `k·d` for a receiving hom `k` out of `dst d`.
    pub fn act_left(&self, k: Mor, d: El) -> Result<El> {
        self.check_element(d)?;
        if !self.receiving.contains_morphism(k) {
            return Err(Error::UnknownMorphism(format!("#{}", k.0)));
        }
        if self.receiving.dom(k) != self.dst(d) {
            return Err(Error::Boundary(format!(
                "dom({}) = {} but {} lands in {}",
                self.receiving.morphism_name(k),
                self.receiving.object_name(self.receiving.dom(k)),
                self.element_name(d),
                self.receiving.object_name(self.dst(d)),
            )));
        }
        Ok(self.left_unchecked(k, d))
    }

    /// `d·h` for a sending hom `h` into `src d`.
    pub fn act_right(&self, d: El, h: Mor) -> Result<El> {
        self.check_element(d)?;
        if !self.sending.contains_morphism(h) {
            return Err(Error::UnknownMorphism(format!("#{}", h.0)));
        }
        if self.sending.cod(h) != self.src(d) {
            return Err(Error::Boundary(format!(
                "cod({}) = {} but {} starts at {}",
                self.sending.morphism_name(h),
                self.sending.object_name(self.sending.cod(h)),
                self.element_name(d),
                self.sending.object_name(self.src(d)),
            )));
        }
        Ok(self.right_unchecked(d, h))
    }

    /// The composite het `X' →h X ⇢d A →k A'`.
    pub fn act(&self, k: Mor, d: El, h: Mor) -> Result<El> {
        let dh = self.act_right(d, h)?;
        self.act_left(k, dh)
    }

    fn check_element(&self, d: El) -> Result<()> {
        if self.contains(d) {
            Ok(())
        } else {
            Err(Error::UnknownElement(format!("#{}", d.0)))
        }
    }

    #[inline]
    pub(crate) fn left_unchecked(&self, k: Mor, d: El) -> El {
        self.left[self.left_offset[d.0] + self.receiving.shape().out_pos[k.0]]
    }

    #[inline]
    pub(crate) fn right_unchecked(&self, d: El, h: Mor) -> El {
        self.right[self.right_offset[d.0] + self.sending.shape().in_pos[h.0]]
    }

    /// Whether `act_left(k, d)` is forced, so a serialized form may omit it.
    pub(crate) fn left_is_forced(&self, k: Mor, d: El) -> bool {
        let v = self.left_unchecked(k, d);
        (self.receiving.is_identity(k) && v == d)
            || self.het_set(self.src(d), self.receiving.cod(k)).len() == 1
    }

    pub(crate) fn right_is_forced(&self, d: El, h: Mor) -> bool {
        let v = self.right_unchecked(d, h);
        (self.sending.is_identity(h) && v == d)
            || self.het_set(self.sending.dom(h), self.dst(d)).len() == 1
    }
}

/// Name-level description of a het bifunctor.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HetBuilder {
    elements: Vec<(String, String, String)>,
    left: Vec<(String, String, String)>,
    right: Vec<(String, String, String)>,
}

impl HetBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Every element and action of `het` spelled out.
    pub fn from_het(het: &HetBifunctor) -> Self {
        let (s, r) = (het.sending(), het.receiving());
        let mut b = HetBuilder::new();
        for d in het.elements() {
            b.element(
                het.element_name(d),
                s.object_name(het.src(d)),
                r.object_name(het.dst(d)),
            );
        }
        for d in het.elements() {
            for &k in r.outgoing(het.dst(d)) {
                b.act_left(
                    r.morphism_name(k),
                    het.element_name(d),
                    het.element_name(het.left_unchecked(k, d)),
                );
            }
            for &h in s.incoming(het.src(d)) {
                b.act_right(
                    het.element_name(d),
                    s.morphism_name(h),
                    het.element_name(het.right_unchecked(d, h)),
                );
            }
        }
        b
    }

    pub fn element(
        &mut self,
        name: impl Into<String>,
        src: impl Into<String>,
        dst: impl Into<String>,
    ) -> &mut Self {
        self.elements.push((name.into(), src.into(), dst.into()));
        self
    }

    /// Relation shorthand: the singleton het `u_x_a: x ⇢ a`.
    pub fn rel(&mut self, x: &str, a: &str) -> &mut Self {
        self.element(format!("u_{x}_{a}"), x, a)
    }

    /// Declares `k·d = v`.
    pub fn act_left(
        &mut self,
        k: impl Into<String>,
        d: impl Into<String>,
        v: impl Into<String>,
    ) -> &mut Self {
        self.left.push((k.into(), d.into(), v.into()));
        self
    }

    /// Declares `d·h = v`.
    pub fn act_right(
        &mut self,
        d: impl Into<String>,
        h: impl Into<String>,
        v: impl Into<String>,
    ) -> &mut Self {
        self.right.push((d.into(), h.into(), v.into()));
        self
    }

    pub fn set_left(&mut self, k: &str, d: &str, v: impl Into<String>) -> &mut Self {
        self.left.retain(|(k2, d2, _)| !(k2 == k && d2 == d));
        self.act_left(k, d, v)
    }

    pub fn set_right(&mut self, d: &str, h: &str, v: impl Into<String>) -> &mut Self {
        self.right.retain(|(d2, h2, _)| !(d2 == d && h2 == h));
        self.act_right(d, h, v)
    }

    pub fn declared_left(&self) -> &[(String, String, String)] {
        &self.left
    }

    pub fn declared_right(&self) -> &[(String, String, String)] {
        &self.right
    }

    pub fn build(
        &self,
        sending: Arc<FinCategory>,
        receiving: Arc<FinCategory>,
    ) -> Result<HetBifunctor, ValidationReport> {
        let mut report = ValidationReport::new();
        let mut elements = Vec::with_capacity(self.elements.len());
        let mut names: HashMap<&str, El> = HashMap::new();
        for (name, x, a) in &self.elements {
            match (sending.object(x), receiving.object(a)) {
                (Ok(src), Ok(dst)) => {
                    names.insert(name.as_str(), El(elements.len()));
                    elements.push(HetElement {
                        name: name.clone(),
                        src,
                        dst,
                    });
                }
                _ => report.push("unknown object", [name.as_str(), x.as_str(), a.as_str()]),
            }
        }
        let mut left = HashMap::new();
        for (k, d, v) in &self.left {
            let (Ok(km), Some(&de), Some(&ve)) = (
                receiving.morphism(k),
                names.get(d.as_str()),
                names.get(v.as_str()),
            ) else {
                report.push(
                    "unknown name in left action",
                    [k.as_str(), d.as_str(), v.as_str()],
                );
                continue;
            };
            if receiving.dom(km) != elements[de.0].dst {
                report.push("left action not defined", [k.as_str(), d.as_str()]);
                continue;
            }
            if let Some(prev) = left.insert((km, de), ve) {
                if prev != ve {
                    report.push("conflicting left action", [k.as_str(), d.as_str()]);
                }
            }
        }
        let mut right = HashMap::new();
        for (d, h, v) in &self.right {
            let (Some(&de), Ok(hm), Some(&ve)) = (
                names.get(d.as_str()),
                sending.morphism(h),
                names.get(v.as_str()),
            ) else {
                report.push(
                    "unknown name in right action",
                    [d.as_str(), h.as_str(), v.as_str()],
                );
                continue;
            };
            if sending.cod(hm) != elements[de.0].src {
                report.push("right action not defined", [d.as_str(), h.as_str()]);
                continue;
            }
            if let Some(prev) = right.insert((de, hm), ve) {
                if prev != ve {
                    report.push("conflicting right action", [d.as_str(), h.as_str()]);
                }
            }
        }
        if !report.ok() {
            return Err(report);
        }
        HetBifunctor::from_tables(
            sending,
            receiving,
            elements,
            |k, d| left.get(&(k, d)).copied(),
            |d, h| right.get(&(d, h)).copied(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `x ⇢ a` iff `x ≤ 2a`, from the chain 0..=4 to the chain 0..=2.
    fn ceiling() -> HetBifunctor {
        let x = Arc::new(FinCategory::chain(5));
        let a = Arc::new(FinCategory::chain(3));
        let mut b = HetBuilder::new();
        for i in 0..5 {
            for j in 0..3 {
                if i <= 2 * j {
                    b.rel(&i.to_string(), &j.to_string());
                }
            }
        }
        b.build(x, a).unwrap()
    }

    #[test]
    fn ceiling_het_validates() {
        let het = ceiling();
        assert_eq!(het.element_count(), 3 + 2 + 2 + 1 + 1);
        assert_eq!(het.het_set_named("3", "1").unwrap().len(), 0);
        assert_eq!(het.het_set_named("3", "2").unwrap().len(), 1);
    }

    #[test]
    fn empty_het_is_valid() {
        let x = Arc::new(FinCategory::chain(3));
        let het = HetBuilder::new().build(x.clone(), x).unwrap();
        assert_eq!(het.element_count(), 0);
    }

    #[test]
    fn act_on_ceiling_het() {
        let het = ceiling();
        let (s, r) = (het.sending().clone(), het.receiving().clone());
        let d = het.element("u_2_1").unwrap();
        let k = r.morphism("le_1_2").unwrap();
        let h = s.morphism("le_1_2").unwrap();
        let v = het.act(k, d, h).unwrap();
        assert_eq!(het.element_name(v), "u_1_2");
        let same = het
            .act(r.morphism("id_1").unwrap(), d, s.morphism("id_2").unwrap())
            .unwrap();
        assert_eq!(same, d);
        let bad = r.morphism("le_0_1").unwrap();
        assert!(matches!(het.act_left(bad, d), Err(Error::Boundary(_))));
    }

    #[test]
    fn non_monotone_relation_is_rejected() {
        // 1 ⇢ 0 without 0 ⇢ 0: the right action by le_0_1 has nowhere to land
        let x = Arc::new(FinCategory::chain(2));
        let mut b = HetBuilder::new();
        b.rel("1", "0");
        let report = b.build(x.clone(), x).unwrap_err();
        assert!(report.has("missing right action"));
    }

    /// Two-element het-sets over the one-object category `{id, s}` with `s`
    /// idempotent, acting on both sides.
    fn idempotent_het(seed_mixed_error: bool) -> Result<HetBifunctor, ValidationReport> {
        let mut cb = crate::fincat::CategoryBuilder::new();
        cb.object("*")
            .morphism("id", "*", "*")
            .morphism("s", "*", "*")
            .identity("*", "id")
            .compose("s", "s", "s");
        let c = Arc::new(cb.build().unwrap());
        let mut b = HetBuilder::new();
        b.element("p", "*", "*").element("q", "*", "*");
        b.act_left("s", "p", "q").act_left("s", "q", "q");
        b.act_right("p", "s", "q").act_right("q", "s", "q");
        if seed_mixed_error {
            // each one-sided action stays functorial; only (kd)h=k(dh) breaks
            b.set_right("p", "s", "p").set_right("q", "s", "p");
        }
        b.build(c.clone(), c)
    }

    #[test]
    fn mixed_associativity_violation_is_witnessed() {
        assert!(idempotent_het(false).is_ok());
        let report = idempotent_het(true).unwrap_err();
        assert!(report.violations.iter().all(|v| v.law == "(kd)h=k(dh)"));
        assert!(report
            .violations
            .iter()
            .any(|v| v.witness == ["s", "q", "s"]));
    }
}
