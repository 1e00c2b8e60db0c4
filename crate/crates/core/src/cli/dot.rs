//! DOT output for the adjunctive square and the butterfly.
//!
//! Hets are drawn dashed and homs solid. Node identifiers are positional, so
//! the same object may label two nodes.

use std::fmt::Write;

use crate::adjoint::{verify_adjunctive_square, verify_butterfly, Adjunction, BrainFunctor};
use crate::error::{Error, Result};
use crate::het::El;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn node(out: &mut String, id: &str, label: &str) {
    let _ = writeln!(out, "  {id} [label={}];", quote(label));
}

fn edge(out: &mut String, from: &str, to: &str, label: &str, het: bool) {
    let style = if het { "dashed" } else { "solid" };
    let _ = writeln!(
        out,
        "  {from} -> {to} [label={}, style={style}];",
        quote(label)
    );
}

/// The square `X ⇢ F(X) → A`, `X → G(A) ⇢ A` for one het `d: X ⇢ A`.
pub fn square_dot(adj: &Adjunction, d: El) -> Result<String> {
    let sq = verify_adjunctive_square(adj, d)?;
    if !sq.commutes() {
        return Err(Error::Integrity(format!(
            "refusing to draw an unverified square:\n{sq}"
        )));
    }
    let (Some(f_d), Some(g_d)) = (&sq.f_d, &sq.g_d) else {
        return Err(Error::Integrity("square has no factorization".into()));
    };
    let mut out = String::new();
    let _ = writeln!(out, "digraph square {{");
    let _ = writeln!(
        out,
        "  label={};",
        quote(&format!("{} : {} ~> {}", sq.het_element, sq.x, sq.a))
    );
    let _ = writeln!(out, "  node [shape=plaintext];");
    node(&mut out, "x", &sq.x);
    node(&mut out, "fx", &sq.fx);
    node(&mut out, "ga", &sq.ga);
    node(&mut out, "a", &sq.a);
    let _ = writeln!(out, "  {{ rank=same; x; fx; }}");
    let _ = writeln!(out, "  {{ rank=same; ga; a; }}");
    edge(&mut out, "x", "fx", &sq.h_x, true);
    edge(&mut out, "fx", "a", f_d, false);
    edge(&mut out, "x", "ga", g_d, false);
    edge(&mut out, "ga", "a", &sq.e_a, true);
    out.push_str("}\n");
    Ok(out)
}

/// The butterfly at `X` for `d_out: X ⇢ A` and `d_in: A' ⇢ X`.
pub fn butterfly_dot(brain: &BrainFunctor, d_out: El, d_in: El) -> Result<String> {
    let b = verify_butterfly(brain, d_out, d_in)?;
    if !(b.upper && b.lower) {
        return Err(Error::Integrity(format!(
            "refusing to draw an unverified butterfly:\n{b}"
        )));
    }
    let (Some(f), Some(g)) = (&b.f, &b.g) else {
        return Err(Error::Integrity("butterfly has no factorization".into()));
    };
    let mut out = String::new();
    let _ = writeln!(out, "digraph butterfly {{");
    let _ = writeln!(
        out,
        "  label={};",
        quote(&format!("{} and {} at {}", b.d_out, b.d_in, b.x))
    );
    let _ = writeln!(out, "  node [shape=plaintext];");
    node(&mut out, "x_out", &b.x);
    node(&mut out, "fx", &b.fx);
    node(&mut out, "a", &b.a_out);
    node(&mut out, "a2", &b.a_in);
    node(&mut out, "x_in", &b.x);
    edge(&mut out, "x_out", "fx", &b.h_x, true);
    edge(&mut out, "fx", "a", f, false);
    edge(&mut out, "a2", "fx", g, false);
    edge(&mut out, "fx", "x_in", &b.e_x, true);
    out.push_str("}\n");
    Ok(out)
}
