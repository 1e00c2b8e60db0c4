//! Adjunctions and brain functors assembled from semiadjunctions.
//!
//! An adjunction pairs a left and a right semiadjunction over one het
//! bifunctor, `Hom(F(X), A) ≅ Het(X, A) ≅ Hom(X, G(A))`. A brain functor pairs
//! them the other way round: one functor `F` that left-represents hets
//! `X ⇢ A` and right-represents hets `A ⇢ X`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{Mor, Obj};
use crate::functor::{induced_het_left, induced_het_right, FinFunctor};
use crate::het::{El, HetBifunctor};
use crate::report::ValidationReport;
use crate::represent::{Semiadjunction, Side};

/// A verified adjunction `F ⊣ G` through a shared het bifunctor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Adjunction {
    left: Semiadjunction,
    right: Semiadjunction,
    /// `composite[x * |A| + a][i]` is the image in `Hom(x, G(a))` of the
    /// `i`-th hom of `Hom(F(x), a)`.
    composite: Vec<Vec<Mor>>,
}

/// Pairs two semiadjunctions over the same het bifunctor and checks the
/// composite bijection and every adjunctive square.
pub fn assemble_adjunction(
    left: Semiadjunction,
    right: Semiadjunction,
) -> Result<Adjunction, ValidationReport> {
    let mut report = ValidationReport::new();
    if left.side() != Side::Left || right.side() != Side::Right {
        report.push("semiadjunction sides", ["expected one left and one right"]);
        return Err(report);
    }
    if !Arc::ptr_eq(left.het(), right.het()) && left.het() != right.het() {
        report.push(
            "het mismatch",
            ["left and right semiadjunctions use different het bifunctors"],
        );
        return Err(report);
    }
    report.extend(left.verify());
    report.extend(right.verify());
    if !report.ok() {
        return Err(report);
    }

    let het = left.het().clone();
    let (send, recv) = (het.sending().clone(), het.receiving().clone());
    let (f_fun, g_fun) = (left.functor(), right.functor());
    let mut composite = Vec::with_capacity(send.object_count() * recv.object_count());
    for x in send.objects() {
        for a in recv.objects() {
            let mut row = Vec::new();
            for (i, &f) in left.hom_side(x, a).iter().enumerate() {
                match right.hom_of(left.bijection(x, a)[i]) {
                    Some(g) => row.push(g),
                    None => report.push(
                        "composite bijection",
                        [send.object_name(x), recv.morphism_name(f)],
                    ),
                }
            }
            composite.push(row);
        }
    }
    if !report.ok() {
        return Err(report);
    }
    let n = recv.object_count();
    let theta = |x: Obj, a: Obj, f: Mor| -> Mor { composite[x.0 * n + a.0][recv.hom_position(f)] };
    for x in send.objects() {
        for a in recv.objects() {
            for &f in left.hom_side(x, a) {
                let g = theta(x, a, f);
                for &k in recv.outgoing(a) {
                    let lhs = theta(x, recv.cod(k), recv.comp_unchecked(k, f));
                    let rhs = send.comp_unchecked(g_fun.mor(k), g);
                    if lhs != rhs {
                        report.push(
                            "composite naturality in the receiving variable",
                            [recv.morphism_name(f), recv.morphism_name(k)],
                        );
                    }
                }
                for &h in send.incoming(x) {
                    let lhs = theta(send.dom(h), a, recv.comp_unchecked(f, f_fun.mor(h)));
                    let rhs = send.comp_unchecked(g, h);
                    if lhs != rhs {
                        report.push(
                            "composite naturality in the sending variable",
                            [recv.morphism_name(f), send.morphism_name(h)],
                        );
                    }
                }
            }
        }
    }
    let adj = Adjunction {
        left,
        right,
        composite,
    };
    for d in het.elements() {
        let sq = adj.square(d);
        if !sq.upper {
            report.push("upper triangle", [sq.het_element.as_str()]);
        }
        if !sq.lower {
            report.push("lower triangle", [sq.het_element.as_str()]);
        }
    }
    report.into_result(|| adj)
}

/// Both factorizations of one het through the adjunctive square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareReport {
    pub het_element: String,
    /// `X`, the sending object `d` starts at.
    pub x: String,
    /// `A`, the receiving object `d` lands in.
    pub a: String,
    pub fx: String,
    pub ga: String,
    pub h_x: String,
    pub e_a: String,
    /// `f(d): F(X) → A`, read from the stored left bijection.
    pub f_d: Option<String>,
    /// `g(d): X → G(A)`, read from the stored right bijection.
    pub g_d: Option<String>,
    /// `f(d)·h_X = d` and `f(d)` is the only hom doing so.
    pub upper: bool,
    /// `e_A·g(d) = d` and `g(d)` is the only hom doing so.
    pub lower: bool,
}

impl SquareReport {
    pub fn commutes(&self) -> bool {
        self.upper && self.lower
    }
}

impl fmt::Display for SquareReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = |ok: bool| if ok { "commutes" } else { "FAILS" };
        let or_none = |s: &Option<String>| s.clone().unwrap_or_else(|| "<none>".into());
        writeln!(
            f,
            "square at {} : {} ~> {}",
            self.het_element, self.x, self.a
        )?;
        writeln!(
            f,
            "  upper: f(d) = {} : {} -> {}, h_X = {} : {} ~> {}  [{}]",
            or_none(&self.f_d),
            self.fx,
            self.a,
            self.h_x,
            self.x,
            self.fx,
            status(self.upper)
        )?;
        write!(
            f,
            "  lower: g(d) = {} : {} -> {}, e_A = {} : {} ~> {}  [{}]",
            or_none(&self.g_d),
            self.x,
            self.ga,
            self.e_a,
            self.ga,
            self.a,
            status(self.lower)
        )?;
        if !self.upper {
            write!(f, "\nupper triangle fails at {}", self.het_element)?;
        }
        if !self.lower {
            write!(f, "\nlower triangle fails at {}", self.het_element)?;
        }
        Ok(())
    }
}

impl Adjunction {
    pub fn left(&self) -> &Semiadjunction {
        &self.left
    }

    pub fn right(&self) -> &Semiadjunction {
        &self.right
    }

    pub fn het(&self) -> &Arc<HetBifunctor> {
        self.left.het()
    }

    /// The composite bijection `Hom(F(x), a) → Hom(x, G(a))`, aligned with
    /// `Hom(F(x), a)`.
    pub fn composite(&self, x: Obj, a: Obj) -> &[Mor] {
        &self.composite[x.0 * self.het().receiving().object_count() + a.0]
    }

    /// Mutable access to the left semiadjunction, for fault injection.
    pub fn left_mut(&mut self) -> &mut Semiadjunction {
        &mut self.left
    }

    pub fn right_mut(&mut self) -> &mut Semiadjunction {
        &mut self.right
    }

    fn square(&self, d: El) -> SquareReport {
        let het = &**self.het();
        let (send, recv) = (het.sending(), het.receiving());
        let (x, a) = (het.src(d), het.dst(d));
        let (fx, ga) = (self.left.functor().obj(x), self.right.functor().obj(a));
        let (h_x, e_a) = (self.left.universal(x), self.right.universal(a));
        let f_d = self.left.hom_of(d);
        let g_d = self.right.hom_of(d);
        let upper = f_d.is_some_and(|f| het.left_unchecked(f, h_x) == d)
            && recv
                .hom_set(fx, a)
                .iter()
                .filter(|&&f| het.left_unchecked(f, h_x) == d)
                .count()
                == 1;
        let lower = g_d.is_some_and(|g| het.right_unchecked(e_a, g) == d)
            && send
                .hom_set(x, ga)
                .iter()
                .filter(|&&g| het.right_unchecked(e_a, g) == d)
                .count()
                == 1;
        SquareReport {
            het_element: het.element_name(d).to_string(),
            x: send.object_name(x).to_string(),
            a: recv.object_name(a).to_string(),
            fx: recv.object_name(fx).to_string(),
            ga: send.object_name(ga).to_string(),
            h_x: het.element_name(h_x).to_string(),
            e_a: het.element_name(e_a).to_string(),
            f_d: f_d.map(|f| recv.morphism_name(f).to_string()),
            g_d: g_d.map(|g| send.morphism_name(g).to_string()),
            upper,
            lower,
        }
    }
}

/// Checks `d = f(d)·h_X` and `d = e_A·g(d)` using the stored bijections.
pub fn verify_adjunctive_square(adj: &Adjunction, d: El) -> Result<SquareReport> {
    if !adj.het().contains(d) {
        return Err(Error::UnknownElement(format!("#{}", d.index())));
    }
    Ok(adj.square(d))
}

/// A functor `F: X → A` representing hets out of `X` on the left and hets
/// into `X` on the right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrainFunctor {
    functor: FinFunctor,
    outgoing: Semiadjunction,
    incoming: Semiadjunction,
}

impl BrainFunctor {
    pub fn functor(&self) -> &FinFunctor {
        &self.functor
    }

    /// `Hom(F(X), A) ≅ Het_out(X, A)`.
    pub fn outgoing(&self) -> &Semiadjunction {
        &self.outgoing
    }

    /// `Het_in(A, X) ≅ Hom(A, F(X))`.
    pub fn incoming(&self) -> &Semiadjunction {
        &self.incoming
    }

    pub fn het_out(&self) -> &Arc<HetBifunctor> {
        self.outgoing.het()
    }

    pub fn het_in(&self) -> &Arc<HetBifunctor> {
        self.incoming.het()
    }

    pub fn incoming_mut(&mut self) -> &mut Semiadjunction {
        &mut self.incoming
    }
}

/// Verifies that `functor` is a brain functor for the given pair of het
/// bifunctors, reporting every object where either representation fails.
pub fn check_brain(
    functor: &FinFunctor,
    het_out: Arc<HetBifunctor>,
    het_in: Arc<HetBifunctor>,
) -> Result<BrainFunctor, ValidationReport> {
    let mut report = ValidationReport::new();
    if het_out.sending() != functor.source() || het_out.receiving() != functor.target() {
        report.push(
            "shape mismatch",
            ["het_out must run from the functor's source to its target"],
        );
    }
    if het_in.sending() != functor.target() || het_in.receiving() != functor.source() {
        report.push(
            "shape mismatch",
            ["het_in must run from the functor's target to its source"],
        );
    }
    if !report.ok() {
        return Err(report);
    }
    let outgoing = Semiadjunction::left_with_functor(het_out, functor.clone());
    let incoming = Semiadjunction::right_with_functor(het_in, functor.clone());
    match (outgoing, incoming) {
        (Ok(outgoing), Ok(incoming)) => Ok(BrainFunctor {
            functor: functor.clone(),
            outgoing,
            incoming,
        }),
        (out, inc) => {
            if let Err(r) = out {
                report.extend(prefixed("het_out (sending side)", r));
            }
            if let Err(r) = inc {
                report.extend(prefixed("het_in (receiving side)", r));
            }
            Err(report)
        }
    }
}

/// A functor with both adjoints, `H ⊣ F ⊣ G`, and the brain functor it yields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjointTriple {
    /// `H ⊣ F` over `Het_in(A, X) = Hom(A, F(X))`.
    pub lower: Adjunction,
    /// `F ⊣ G` over `Het_out(X, A) = Hom(F(X), A)`.
    pub upper: Adjunction,
    pub brain: BrainFunctor,
}

/// Builds `Het_out := Hom_A(F(-), -)` and `Het_in := Hom_A(-, F(-))`, verifies
/// `H ⊣ F` and `F ⊣ G` through them, and confirms `F` is a brain functor.
pub fn brain_from_adjoints(
    h: &FinFunctor,
    f: &FinFunctor,
    g: &FinFunctor,
) -> Result<AdjointTriple, ValidationReport> {
    let mut report = ValidationReport::new();
    for (name, other) in [("left", h), ("right", g)] {
        if other.source() != f.target() || other.target() != f.source() {
            report.push(
                "shape mismatch",
                [format!(
                    "{name} adjoint must run opposite to the middle functor"
                )],
            );
        }
    }
    if !report.ok() {
        return Err(report);
    }
    let het_out = Arc::new(induced_het_left(f));
    let het_in = Arc::new(induced_het_right(f));
    let left_h = Semiadjunction::left_with_functor(het_in.clone(), h.clone())
        .map_err(|r| prefixed("left adjunction fails", r));
    let right_g = Semiadjunction::right_with_functor(het_out.clone(), g.clone())
        .map_err(|r| prefixed("right adjunction fails", r));
    let brain = check_brain(f, het_out, het_in);
    let (left_h, right_g, brain) = match (left_h, right_g, brain) {
        (Ok(l), Ok(r), Ok(b)) => (l, r, b),
        (l, r, b) => {
            for e in [l.err(), r.err(), b.err()].into_iter().flatten() {
                report.extend(e);
            }
            return Err(report);
        }
    };
    let lower = assemble_adjunction(left_h, brain.incoming.clone())
        .map_err(|r| prefixed("left adjunction fails", r))?;
    let upper = assemble_adjunction(brain.outgoing.clone(), right_g)
        .map_err(|r| prefixed("right adjunction fails", r))?;
    Ok(AdjointTriple {
        lower,
        upper,
        brain,
    })
}

/// Both wings of the butterfly at one sending object `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ButterflyReport {
    pub x: String,
    pub fx: String,
    /// Target of the outgoing het.
    pub a_out: String,
    /// Source of the incoming het.
    pub a_in: String,
    pub d_out: String,
    pub d_in: String,
    /// `h_X: X ⇢ F(X)` in `Het_out`.
    pub h_x: String,
    /// `e_X: F(X) ⇢ X` in `Het_in`.
    pub e_x: String,
    /// `f(d_out): F(X) → A`.
    pub f: Option<String>,
    /// `g(d_in): A' → F(X)`.
    pub g: Option<String>,
    pub upper: bool,
    pub lower: bool,
}

impl fmt::Display for ButterflyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = |ok: bool| if ok { "commutes" } else { "FAILS" };
        let or_none = |s: &Option<String>| s.clone().unwrap_or_else(|| "<none>".into());
        writeln!(
            f,
            "butterfly at {} with F({}) = {}",
            self.x, self.x, self.fx
        )?;
        writeln!(
            f,
            "  upper wing: {} : {} ~> {} = {} . {}  [{}]",
            self.d_out,
            self.x,
            self.a_out,
            or_none(&self.f),
            self.h_x,
            status(self.upper)
        )?;
        write!(
            f,
            "  lower wing: {} : {} ~> {} = {} . {}  [{}]",
            self.d_in,
            self.a_in,
            self.x,
            self.e_x,
            or_none(&self.g),
            status(self.lower)
        )
    }
}

/// Factors `d_out ∈ Het_out(X, A)` through `h_X` and `d_in ∈ Het_in(A', X)`
/// through `e_X`, both at the same `X`.
pub fn verify_butterfly(brain: &BrainFunctor, d_out: El, d_in: El) -> Result<ButterflyReport> {
    let (out, inc) = (&**brain.het_out(), &**brain.het_in());
    if !out.contains(d_out) {
        return Err(Error::UnknownElement(format!(
            "#{} in het_out",
            d_out.index()
        )));
    }
    if !inc.contains(d_in) {
        return Err(Error::UnknownElement(format!(
            "#{} in het_in",
            d_in.index()
        )));
    }
    let x = out.src(d_out);
    if inc.dst(d_in) != x {
        return Err(Error::Precondition(format!(
            "{} starts at {} but {} lands in {}",
            out.element_name(d_out),
            out.sending().object_name(x),
            inc.element_name(d_in),
            inc.receiving().object_name(inc.dst(d_in)),
        )));
    }
    let a_cat = out.receiving();
    let fx = brain.functor.obj(x);
    let (a_out, a_in) = (out.dst(d_out), inc.src(d_in));
    let h_x = brain.outgoing.universal(x);
    let e_x = brain.incoming.universal(x);
    let f = brain.outgoing.hom_of(d_out);
    let g = brain.incoming.hom_of(d_in);
    let upper = f.is_some_and(|f| out.left_unchecked(f, h_x) == d_out)
        && a_cat
            .hom_set(fx, a_out)
            .iter()
            .filter(|&&f| out.left_unchecked(f, h_x) == d_out)
            .count()
            == 1;
    let lower = g.is_some_and(|g| inc.right_unchecked(e_x, g) == d_in)
        && a_cat
            .hom_set(a_in, fx)
            .iter()
            .filter(|&&g| inc.right_unchecked(e_x, g) == d_in)
            .count()
            == 1;
    Ok(ButterflyReport {
        x: out.sending().object_name(x).to_string(),
        fx: a_cat.object_name(fx).to_string(),
        a_out: a_cat.object_name(a_out).to_string(),
        a_in: a_cat.object_name(a_in).to_string(),
        d_out: out.element_name(d_out).to_string(),
        d_in: inc.element_name(d_in).to_string(),
        h_x: out.element_name(h_x).to_string(),
        e_x: inc.element_name(e_x).to_string(),
        f: f.map(|m| a_cat.morphism_name(m).to_string()),
        g: g.map(|m| a_cat.morphism_name(m).to_string()),
        upper,
        lower,
    })
}

fn prefixed(prefix: &str, report: ValidationReport) -> ValidationReport {
    let mut out = ValidationReport::new();
    for v in report.violations {
        out.push(format!("{prefix}: {}", v.law), v.witness);
    }
    out
}
