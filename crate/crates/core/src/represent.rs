//! Receiving and sending universals, found by exhaustive search.
//!
//! A receiving universal for `X` is a pair `(F(X), h_X)` with
//! `h_X ∈ Het(X, F(X))` such that every het `d: X ⇢ A` equals `f·h_X` for
//! exactly one hom `f: F(X) → A`. A sending universal for `A` is the dual pair
//! `(G(A), e_A)` with every `d: X ⇢ A` equal to `e_A·g` for exactly one
//! `g: X → G(A)`. Choosing a universal for every object yields a functor and
//! a family of bijections, i.e. a left or right semiadjunction.
//!
//! Search order is declaration order of candidate objects, then of elements;
//! the first candidate that passes wins.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{FinCategory, Mor, Obj};
use crate::functor::FinFunctor;
use crate::het::{El, HetBifunctor};
use crate::report::ValidationReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// Representation through a receiving universal, `Hom(F(X), A) ≅ Het(X, A)`.
    Left,
    /// Representation through a sending universal, `Het(X, A) ≅ Hom(X, G(A))`.
    Right,
}

/// A representing object together with its universal het.
///
/// For [`Side::Left`], `base` is a sending object `X`, `rep` is `F(X)` in the
/// receiving category and `universal` is `h_X: X ⇢ F(X)`. For
/// [`Side::Right`], `base` is a receiving object `A`, `rep` is `G(A)` in the
/// sending category and `universal` is `e_A: G(A) ⇢ A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UniversalArrow {
    pub side: Side,
    pub base: Obj,
    pub rep: Obj,
    pub universal: El,
}

/// Whether `f ↦ f·u` is a bijection `Hom(r, A) → Het(x, A)` for every `A`.
pub fn is_left_universal(het: &HetBifunctor, x: Obj, r: Obj, u: El) -> bool {
    if !het.contains(u) || het.src(u) != x || het.dst(u) != r {
        return false;
    }
    let recv = het.receiving();
    let mut seen = Vec::new();
    recv.objects().all(|a| {
        let homs = recv.hom_set(r, a);
        let hets = het.het_set(x, a);
        if homs.len() != hets.len() {
            return false;
        }
        seen.clear();
        seen.resize(hets.len(), false);
        homs.iter().all(|&f| {
            let pos = het.set_position(het.left_unchecked(f, u));
            !std::mem::replace(&mut seen[pos], true)
        })
    })
}

/// Whether `g ↦ u·g` is a bijection `Hom(X, r) → Het(X, a)` for every `X`.
pub fn is_right_universal(het: &HetBifunctor, a: Obj, r: Obj, u: El) -> bool {
    if !het.contains(u) || het.dst(u) != a || het.src(u) != r {
        return false;
    }
    let send = het.sending();
    let mut seen = Vec::new();
    send.objects().all(|x| {
        let homs = send.hom_set(x, r);
        let hets = het.het_set(x, a);
        if homs.len() != hets.len() {
            return false;
        }
        seen.clear();
        seen.resize(hets.len(), false);
        homs.iter().all(|&g| {
            let pos = het.set_position(het.right_unchecked(u, g));
            !std::mem::replace(&mut seen[pos], true)
        })
    })
}

/// Every `(R, u)` with `u ∈ Het(x, R)` that passes the receiving UMP.
pub fn left_representations(het: &HetBifunctor, x: Obj) -> Vec<UniversalArrow> {
    left_candidates(het, x)
        .filter(|c| is_left_universal(het, x, c.rep, c.universal))
        .collect()
}

/// Every `(R, u)` with `u ∈ Het(R, a)` that passes the sending UMP.
pub fn right_representations(het: &HetBifunctor, a: Obj) -> Vec<UniversalArrow> {
    right_candidates(het, a)
        .filter(|c| is_right_universal(het, a, c.rep, c.universal))
        .collect()
}

fn left_candidates(het: &HetBifunctor, x: Obj) -> impl Iterator<Item = UniversalArrow> + '_ {
    het.receiving().objects().flat_map(move |r| {
        het.het_set(x, r).iter().map(move |&u| UniversalArrow {
            side: Side::Left,
            base: x,
            rep: r,
            universal: u,
        })
    })
}

fn right_candidates(het: &HetBifunctor, a: Obj) -> impl Iterator<Item = UniversalArrow> + '_ {
    het.sending().objects().flat_map(move |r| {
        het.het_set(r, a).iter().map(move |&u| UniversalArrow {
            side: Side::Right,
            base: a,
            rep: r,
            universal: u,
        })
    })
}

/// First receiving universal for `x` in declaration order, if any exists.
///
/// An object with no hets at all is never representable, since `Hom(R, R)`
/// always contains the identity.
pub fn find_left_representation(het: &HetBifunctor, x: Obj) -> Option<UniversalArrow> {
    left_candidates(het, x).find(|c| is_left_universal(het, x, c.rep, c.universal))
}

/// First sending universal for `a` in declaration order, if any exists.
pub fn find_right_representation(het: &HetBifunctor, a: Obj) -> Option<UniversalArrow> {
    right_candidates(het, a).find(|c| is_right_universal(het, a, c.rep, c.universal))
}

/// The unique `f: F(X) → A` with `f·h_X = d`.
pub fn factor_left(het: &HetBifunctor, u: &UniversalArrow, d: El) -> Result<Mor> {
    check_arrow(het, u, Side::Left)?;
    if !het.contains(d) {
        return Err(Error::UnknownElement(format!("#{}", d.index())));
    }
    if het.src(d) != u.base {
        return Err(Error::Precondition(format!(
            "{} starts at {}, not at {}",
            het.element_name(d),
            het.sending().object_name(het.src(d)),
            het.sending().object_name(u.base),
        )));
    }
    let recv = het.receiving();
    let mut found = recv
        .hom_set(u.rep, het.dst(d))
        .iter()
        .copied()
        .filter(|&f| het.left_unchecked(f, u.universal) == d);
    unique_factor(het, recv, d, found.next(), found.next())
}

/// The unique `g: X → G(A)` with `e_A·g = d`.
pub fn factor_right(het: &HetBifunctor, u: &UniversalArrow, d: El) -> Result<Mor> {
    check_arrow(het, u, Side::Right)?;
    if !het.contains(d) {
        return Err(Error::UnknownElement(format!("#{}", d.index())));
    }
    if het.dst(d) != u.base {
        return Err(Error::Precondition(format!(
            "{} lands in {}, not in {}",
            het.element_name(d),
            het.receiving().object_name(het.dst(d)),
            het.receiving().object_name(u.base),
        )));
    }
    let send = het.sending();
    let mut found = send
        .hom_set(het.src(d), u.rep)
        .iter()
        .copied()
        .filter(|&g| het.right_unchecked(u.universal, g) == d);
    unique_factor(het, send, d, found.next(), found.next())
}

fn unique_factor(
    het: &HetBifunctor,
    cat: &FinCategory,
    d: El,
    first: Option<Mor>,
    second: Option<Mor>,
) -> Result<Mor> {
    match (first, second) {
        (Some(f), None) => Ok(f),
        (None, _) => Err(Error::Integrity(format!(
            "no hom factors {} through the universal",
            het.element_name(d)
        ))),
        (Some(f), Some(g)) => Err(Error::Integrity(format!(
            "{} factors through both {} and {}",
            het.element_name(d),
            cat.morphism_name(f),
            cat.morphism_name(g)
        ))),
    }
}

fn check_arrow(het: &HetBifunctor, u: &UniversalArrow, side: Side) -> Result<()> {
    if u.side != side {
        return Err(Error::Precondition(format!(
            "expected a {side:?} universal arrow"
        )));
    }
    if !het.contains(u.universal) {
        return Err(Error::Integrity(
            "universal het is not an element of the bifunctor".into(),
        ));
    }
    let (src, dst) = match side {
        Side::Left => (u.base, u.rep),
        Side::Right => (u.rep, u.base),
    };
    if het.src(u.universal) != src || het.dst(u.universal) != dst {
        return Err(Error::Integrity(format!(
            "universal {} does not run between the recorded objects",
            het.element_name(u.universal)
        )));
    }
    Ok(())
}

/// The homs comparing two universals for the same base: `(p, q)` with
/// `p: u.rep → v.rep` factoring `v` through `u` and `q` factoring `u` through
/// `v`. For genuine universals they are mutually inverse.
pub fn comparison(
    het: &HetBifunctor,
    u: &UniversalArrow,
    v: &UniversalArrow,
) -> Result<(Mor, Mor)> {
    if u.side != v.side || u.base != v.base {
        return Err(Error::Precondition(
            "universals for different objects".into(),
        ));
    }
    match u.side {
        Side::Left => Ok((
            factor_left(het, u, v.universal)?,
            factor_left(het, v, u.universal)?,
        )),
        Side::Right => Ok((
            factor_right(het, v, u.universal)?,
            factor_right(het, u, v.universal)?,
        )),
    }
}

/// A functor with a stored natural bijection between a hom family and the
/// het family it represents.
///
/// Left: `F: X → A` with `ψ_{X,A}: Hom(F(X), A) ≅ Het(X, A)`, `ψ(f) = f·h_X`.
/// Right: `G: A → X` with `φ_{X,A}: Het(X, A) ≅ Hom(X, G(A))`, stored as
/// its inverse `g ↦ e_A·g`.
///
/// The bijections are stored, not recomputed, and [`verify`](Self::verify)
/// rechecks them, so tampering with an entry is detectable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Semiadjunction {
    side: Side,
    het: Arc<HetBifunctor>,
    functor: FinFunctor,
    arrows: Vec<UniversalArrow>,
    /// `bijections[x * |A| + a][i]` is the het matched with the `i`-th hom of
    /// `Hom(F(x), a)` (left) or `Hom(x, G(a))` (right).
    bijections: Vec<Vec<El>>,
}

impl Semiadjunction {
    /// Finds a receiving universal for every sending object and induces `F`.
    pub fn build_left(het: Arc<HetBifunctor>) -> Result<Semiadjunction, ValidationReport> {
        let send = het.sending().clone();
        let mut report = ValidationReport::new();
        let mut arrows = Vec::with_capacity(send.object_count());
        for x in send.objects() {
            match find_left_representation(&het, x) {
                Some(u) => arrows.push(u),
                None => report.push(
                    unrepresentable_law(&het, Side::Left, x),
                    [send.object_name(x)],
                ),
            }
        }
        if !report.ok() {
            return Err(report);
        }
        // F(h) for h: X' → X is the factor of h_X·h through h_{X'}
        let mut mor_map = Vec::with_capacity(send.morphism_count());
        for h in send.morphisms() {
            let (xp, x) = (send.dom(h), send.cod(h));
            let moved = het.right_unchecked(arrows[x.0].universal, h);
            match factor_left(&het, &arrows[xp.0], moved) {
                Ok(f) => mor_map.push(f),
                Err(e) => {
                    report.push(
                        "internal: induced functor",
                        [send.morphism_name(h).to_string(), e.to_string()],
                    );
                    return Err(report);
                }
            }
        }
        let obj_map = arrows.iter().map(|u| u.rep).collect();
        let functor = FinFunctor::new(send, het.receiving().clone(), obj_map, mor_map)
            .map_err(|r| prefixed("internal: induced functor", r))?;
        Self::from_arrows(Side::Left, het, functor, arrows)
    }

    /// Finds a sending universal for every receiving object and induces `G`.
    pub fn build_right(het: Arc<HetBifunctor>) -> Result<Semiadjunction, ValidationReport> {
        let recv = het.receiving().clone();
        let mut report = ValidationReport::new();
        let mut arrows = Vec::with_capacity(recv.object_count());
        for a in recv.objects() {
            match find_right_representation(&het, a) {
                Some(u) => arrows.push(u),
                None => report.push(
                    unrepresentable_law(&het, Side::Right, a),
                    [recv.object_name(a)],
                ),
            }
        }
        if !report.ok() {
            return Err(report);
        }
        // G(k) for k: A → A' is the factor of k·e_A through e_{A'}
        let mut mor_map = Vec::with_capacity(recv.morphism_count());
        for k in recv.morphisms() {
            let (a, ap) = (recv.dom(k), recv.cod(k));
            let moved = het.left_unchecked(k, arrows[a.0].universal);
            match factor_right(&het, &arrows[ap.0], moved) {
                Ok(g) => mor_map.push(g),
                Err(e) => {
                    report.push(
                        "internal: induced functor",
                        [recv.morphism_name(k).to_string(), e.to_string()],
                    );
                    return Err(report);
                }
            }
        }
        let obj_map = arrows.iter().map(|u| u.rep).collect();
        let functor = FinFunctor::new(recv, het.sending().clone(), obj_map, mor_map)
            .map_err(|r| prefixed("internal: induced functor", r))?;
        Self::from_arrows(Side::Right, het, functor, arrows)
    }

    /// Checks that a given `F: X → A` left-represents `het`: each `F(X)` must
    /// carry a receiving universal, and the bijections must be natural with
    /// respect to `F` itself.
    ///
    /// For each `X` the first universal in `Het(X, F(X))` is used. Categories
    /// with non-trivial automorphisms may need a different choice to make the
    /// family natural, which this check does not attempt.
    pub fn left_with_functor(
        het: Arc<HetBifunctor>,
        functor: FinFunctor,
    ) -> Result<Semiadjunction, ValidationReport> {
        let mut report = ValidationReport::new();
        if functor.source() != het.sending() || functor.target() != het.receiving() {
            report.push(
                "functor does not run from the sending to the receiving category",
                ["functor"],
            );
            return Err(report);
        }
        let send = het.sending().clone();
        let mut arrows = Vec::new();
        for x in send.objects() {
            let r = functor.obj(x);
            match het
                .het_set(x, r)
                .iter()
                .find(|&&u| is_left_universal(&het, x, r, u))
            {
                Some(&u) => arrows.push(UniversalArrow {
                    side: Side::Left,
                    base: x,
                    rep: r,
                    universal: u,
                }),
                None => report.push(
                    "no receiving universal at the functor's value",
                    [send.object_name(x)],
                ),
            }
        }
        if !report.ok() {
            return Err(report);
        }
        Self::from_arrows(Side::Left, het, functor, arrows)
    }

    /// Checks that a given `G: A → X` right-represents `het`.
    pub fn right_with_functor(
        het: Arc<HetBifunctor>,
        functor: FinFunctor,
    ) -> Result<Semiadjunction, ValidationReport> {
        let mut report = ValidationReport::new();
        if functor.source() != het.receiving() || functor.target() != het.sending() {
            report.push(
                "functor does not run from the receiving to the sending category",
                ["functor"],
            );
            return Err(report);
        }
        let recv = het.receiving().clone();
        let mut arrows = Vec::new();
        for a in recv.objects() {
            let r = functor.obj(a);
            match het
                .het_set(r, a)
                .iter()
                .find(|&&u| is_right_universal(&het, a, r, u))
            {
                Some(&u) => arrows.push(UniversalArrow {
                    side: Side::Right,
                    base: a,
                    rep: r,
                    universal: u,
                }),
                None => report.push(
                    "no sending universal at the functor's value",
                    [recv.object_name(a)],
                ),
            }
        }
        if !report.ok() {
            return Err(report);
        }
        Self::from_arrows(Side::Right, het, functor, arrows)
    }

    fn from_arrows(
        side: Side,
        het: Arc<HetBifunctor>,
        functor: FinFunctor,
        arrows: Vec<UniversalArrow>,
    ) -> Result<Semiadjunction, ValidationReport> {
        let (send, recv) = (het.sending().clone(), het.receiving().clone());
        let mut bijections = Vec::with_capacity(send.object_count() * recv.object_count());
        for x in send.objects() {
            for a in recv.objects() {
                let row = match side {
                    Side::Left => {
                        let h = arrows[x.0].universal;
                        recv.hom_set(functor.obj(x), a)
                            .iter()
                            .map(|&f| het.left_unchecked(f, h))
                            .collect()
                    }
                    Side::Right => {
                        let e = arrows[a.0].universal;
                        send.hom_set(x, functor.obj(a))
                            .iter()
                            .map(|&g| het.right_unchecked(e, g))
                            .collect()
                    }
                };
                bijections.push(row);
            }
        }
        let semi = Semiadjunction {
            side,
            het,
            functor,
            arrows,
            bijections,
        };
        let report = semi.verify();
        report.into_result(|| semi)
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn het(&self) -> &Arc<HetBifunctor> {
        &self.het
    }

    /// `F` for a left semiadjunction, `G` for a right one.
    pub fn functor(&self) -> &FinFunctor {
        &self.functor
    }

    pub fn arrows(&self) -> &[UniversalArrow] {
        &self.arrows
    }

    pub fn arrow(&self, base: Obj) -> &UniversalArrow {
        &self.arrows[base.0]
    }

    /// The cached universal het: `h_X` on the left, `e_A` on the right.
    pub fn universal(&self, base: Obj) -> El {
        self.arrows[base.0].universal
    }

    /// Hom-set on the hom side of the bijection at `(x, a)`.
    pub fn hom_side(&self, x: Obj, a: Obj) -> &[Mor] {
        match self.side {
            Side::Left => self.het.receiving().hom_set(self.functor.obj(x), a),
            Side::Right => self.het.sending().hom_set(x, self.functor.obj(a)),
        }
    }

    fn hom_category(&self) -> &Arc<FinCategory> {
        match self.side {
            Side::Left => self.het.receiving(),
            Side::Right => self.het.sending(),
        }
    }

    /// Stored hets matched with `hom_side(x, a)`, position by position.
    pub fn bijection(&self, x: Obj, a: Obj) -> &[El] {
        &self.bijections[x.0 * self.het.receiving().object_count() + a.0]
    }

    /// The stored het matched with `hom`, which must lie in `hom_side(x, a)`.
    pub fn het_of(&self, x: Obj, a: Obj, hom: Mor) -> Option<El> {
        let homs = self.hom_side(x, a);
        let pos = homs.iter().position(|&m| m == hom)?;
        self.bijection(x, a).get(pos).copied()
    }

    /// The stored hom matched with `d`: `f(d)` on the left, `g(d)` on the right.
    pub fn hom_of(&self, d: El) -> Option<Mor> {
        if !self.het.contains(d) {
            return None;
        }
        let (x, a) = (self.het.src(d), self.het.dst(d));
        let pos = self.bijection(x, a).iter().position(|&e| e == d)?;
        self.hom_side(x, a).get(pos).copied()
    }

    /// [`hom_of`](Self::hom_of) with an integrity error when the stored
    /// family has no entry for `d`.
    pub fn factor(&self, d: El) -> Result<Mor> {
        if !self.het.contains(d) {
            return Err(Error::UnknownElement(format!("#{}", d.index())));
        }
        self.hom_of(d).ok_or_else(|| {
            Error::Integrity(format!(
                "stored bijection has no hom for {}",
                self.het.element_name(d)
            ))
        })
    }

    /// Overwrites one stored bijection entry without re-verification.
    pub fn override_entry(&mut self, x: Obj, a: Obj, position: usize, value: El) {
        let n = self.het.receiving().object_count();
        self.bijections[x.0 * n + a.0][position] = value;
    }

    /// Rechecks the stored family: each entry is a bijection, the cached
    /// universals are the images of identities, and the family is natural in
    /// both variables.
    pub fn verify(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        let het = &*self.het;
        let (send, recv) = (het.sending(), het.receiving());
        let homcat = self.hom_category().clone();
        let oname = |side_send: bool, o: Obj| -> String {
            if side_send {
                send.object_name(o).to_string()
            } else {
                recv.object_name(o).to_string()
            }
        };

        for u in &self.arrows {
            let (x, a, id) = match self.side {
                Side::Left => (
                    u.base,
                    self.functor.obj(u.base),
                    recv.identity(self.functor.obj(u.base)),
                ),
                Side::Right => (
                    self.functor.obj(u.base),
                    u.base,
                    send.identity(self.functor.obj(u.base)),
                ),
            };
            if u.rep != self.functor.obj(u.base) || self.het_of(x, a, id) != Some(u.universal) {
                let base = oname(self.side == Side::Left, u.base);
                report.push("universal het is not the image of the identity", [base]);
            }
        }

        for x in send.objects() {
            for a in recv.objects() {
                let homs = self.hom_side(x, a);
                let row = self.bijection(x, a);
                let hets = het.het_set(x, a);
                let mut seen = vec![false; hets.len()];
                let mut bijective = homs.len() == hets.len() && row.len() == homs.len();
                for &e in row {
                    if !het.contains(e) || het.src(e) != x || het.dst(e) != a {
                        bijective = false;
                        continue;
                    }
                    if std::mem::replace(&mut seen[het.set_position(e)], true) {
                        bijective = false;
                    }
                }
                if !bijective {
                    report.push("bijection", [send.object_name(x), recv.object_name(a)]);
                }
            }
        }

        // naturality squares
        for x in send.objects() {
            for a in recv.objects() {
                let homs = self.hom_side(x, a);
                for (i, &m) in homs.iter().enumerate() {
                    let Some(&e) = self.bijection(x, a).get(i) else {
                        continue;
                    };
                    // receiving variable: k: a → a'
                    for &k in recv.outgoing(a) {
                        let moved_hom = match self.side {
                            Side::Left => homcat.comp_unchecked(k, m),
                            Side::Right => homcat.comp_unchecked(self.functor.mor(k), m),
                        };
                        let lhs = self.het_of(x, recv.cod(k), moved_hom);
                        let rhs = het.act_left(k, e).ok();
                        if lhs.is_none() || lhs != rhs {
                            report.push(
                                "naturality in the receiving variable",
                                [
                                    send.object_name(x),
                                    homcat.morphism_name(m),
                                    recv.morphism_name(k),
                                ],
                            );
                        }
                    }
                    // sending variable: h: x' → x
                    for &h in send.incoming(x) {
                        let moved_hom = match self.side {
                            Side::Left => homcat.comp_unchecked(m, self.functor.mor(h)),
                            Side::Right => homcat.comp_unchecked(m, h),
                        };
                        let lhs = self.het_of(send.dom(h), a, moved_hom);
                        let rhs = het.act_right(e, h).ok();
                        if lhs.is_none() || lhs != rhs {
                            report.push(
                                "naturality in the sending variable",
                                [
                                    recv.object_name(a),
                                    homcat.morphism_name(m),
                                    send.morphism_name(h),
                                ],
                            );
                        }
                    }
                }
            }
        }
        report
    }
}

fn unrepresentable_law(het: &HetBifunctor, side: Side, base: Obj) -> &'static str {
    let empty = match side {
        Side::Left => het
            .receiving()
            .objects()
            .all(|a| het.het_set(base, a).is_empty()),
        Side::Right => het
            .sending()
            .objects()
            .all(|x| het.het_set(x, base).is_empty()),
    };
    if empty {
        "not representable (no hets at this object)"
    } else {
        "not representable"
    }
}

fn prefixed(prefix: &str, report: ValidationReport) -> ValidationReport {
    let mut out = ValidationReport::new();
    for v in report.violations {
        out.push(format!("{prefix}: {}", v.law), v.witness);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functor::hom_bifunctor;
    use crate::het::HetBuilder;

    fn ceiling(n: usize, m: usize) -> Arc<HetBifunctor> {
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
        Arc::new(b.build(x, a).unwrap())
    }

    #[test]
    fn ceiling_left_and_right_representations() {
        let het = ceiling(4, 2);
        let (s, r) = (het.sending().clone(), het.receiving().clone());
        let u = find_left_representation(&het, s.object("3").unwrap()).unwrap();
        assert_eq!(r.object_name(u.rep), "2");
        assert_eq!(het.element_name(u.universal), "u_3_2");
        let v = find_right_representation(&het, r.object("1").unwrap()).unwrap();
        assert_eq!(s.object_name(v.rep), "2");
        let w = find_right_representation(&het, r.object("2").unwrap()).unwrap();
        assert_eq!(s.object_name(w.rep), "4");
    }

    #[test]
    fn empty_het_sets_are_unrepresentable() {
        let het = ceiling(4, 1);
        let x3 = het.sending().object("3").unwrap();
        assert!(find_left_representation(&het, x3).is_none());
        let report = Semiadjunction::build_left(het).unwrap_err();
        assert!(report.has("not representable (no hets at this object)"));
    }

    #[test]
    fn factoring_through_universals() {
        let het = ceiling(4, 2);
        let (s, r) = (het.sending().clone(), het.receiving().clone());
        let u1 = find_left_representation(&het, s.object("1").unwrap()).unwrap();
        let d = het.element("u_1_2").unwrap();
        assert_eq!(
            r.morphism_name(factor_left(&het, &u1, d).unwrap()),
            "le_1_2"
        );
        assert_eq!(
            factor_left(&het, &u1, u1.universal).unwrap(),
            r.identity(u1.rep)
        );
        let stray = het.element("u_2_2").unwrap();
        assert!(matches!(
            factor_left(&het, &u1, stray),
            Err(Error::Precondition(_))
        ));

        let e1 = find_right_representation(&het, r.object("1").unwrap()).unwrap();
        let d = het.element("u_1_1").unwrap();
        assert_eq!(
            s.morphism_name(factor_right(&het, &e1, d).unwrap()),
            "le_1_2"
        );
        assert_eq!(
            factor_right(&het, &e1, e1.universal).unwrap(),
            s.identity(e1.rep)
        );
        assert!(matches!(
            factor_right(&het, &e1, stray),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn forged_arrow_is_an_integrity_error() {
        let het = ceiling(4, 2);
        let s = het.sending().clone();
        let mut u = find_left_representation(&het, s.object("1").unwrap()).unwrap();
        // u_1_2 is a het out of 1, but not a universal one
        u.universal = het.element("u_1_2").unwrap();
        u.rep = het.receiving().object("2").unwrap();
        let d = het.element("u_1_1").unwrap();
        assert!(matches!(factor_left(&het, &u, d), Err(Error::Integrity(_))));
        u.rep = het.receiving().object("1").unwrap();
        assert!(matches!(factor_left(&het, &u, d), Err(Error::Integrity(_))));
    }

    #[test]
    fn ceiling_semiadjunctions() {
        let het = ceiling(4, 2);
        let left = Semiadjunction::build_left(het.clone()).unwrap();
        let table: Vec<(String, String)> = left.functor().object_table();
        let expected = [("0", "0"), ("1", "1"), ("2", "1"), ("3", "2"), ("4", "2")];
        assert_eq!(
            table,
            expected
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .to_vec()
        );
        let right = Semiadjunction::build_right(het).unwrap();
        let expected = [("0", "0"), ("1", "2"), ("2", "4")];
        assert_eq!(
            right.functor().object_table(),
            expected
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .to_vec()
        );
    }

    #[test]
    fn hom_bifunctor_is_represented_by_identity() {
        let c = Arc::new(FinCategory::chain(3));
        let hom = Arc::new(hom_bifunctor(c.clone()));
        for x in c.objects() {
            let u = find_left_representation(&hom, x).unwrap();
            assert_eq!(u.rep, x);
            assert_eq!(
                hom.element_name(u.universal),
                c.morphism_name(c.identity(x))
            );
        }
        let left = Semiadjunction::build_left(hom.clone()).unwrap();
        assert_eq!(*left.functor(), FinFunctor::identity(c.clone()));
        let right = Semiadjunction::build_right(hom).unwrap();
        assert_eq!(*right.functor(), FinFunctor::identity(c));
    }

    #[test]
    fn tampered_bijection_fails_verification() {
        let het = ceiling(4, 2);
        let mut left = Semiadjunction::build_left(het.clone()).unwrap();
        let (s, r) = (het.sending().clone(), het.receiving().clone());
        let (x, a) = (s.object("1").unwrap(), r.object("2").unwrap());
        left.override_entry(x, a, 0, het.element("u_0_2").unwrap());
        let report = left.verify();
        assert!(report.has("bijection"));
        assert!(left.hom_of(het.element("u_1_2").unwrap()).is_none());
    }
}
