//! Frame formulas over `{beta, P, Q}` and the frame-class sentences.
//!
//! Atoms that mention `p_e` or `q_e` abbreviate `E z. end_P(z) & atom[z]`
//! (resp. `end_Q`), expanded here one atom at a time.

use super::sequences::{sequence_with, zero_point_with, Member};
use super::{and_all, beta, collinear, instantiate, or_all, strict_beta};
use crate::logic::{Formula, Fresh};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrameKind {
    Finite,
    Infinite,
}

/// Endpoint formulas (free `x`), the domain formula (free `u`) and the two
/// successor formulas (free `u, v`).
#[derive(Debug, Clone, PartialEq)]
pub struct FrameFormulas {
    pub end_p: Formula,
    pub end_q: Formula,
    pub dom: Formula,
    pub h: Formula,
    pub v: Formula,
}

fn pred(set: &str, v: &str) -> Formula {
    Formula::pred(set, v)
}

/// `end_own(x)`: `x` is in `own`, not in `other`, and not strictly between two members of `own`.
pub fn end_point(own: &str, other: &str) -> Formula {
    let inner = and_all([pred(own, "y"), pred(own, "z"), strict_beta("y", "x", "z")]);
    and_all([pred(own, "x"), pred(other, "x").not(), Formula::exists_many(&["y", "z"], inner).not()])
}

struct Ends {
    end_p: Formula,
    end_q: Formula,
    fresh: Fresh,
}

impl Ends {
    fn new() -> Self {
        Ends { end_p: end_point("P", "Q"), end_q: end_point("Q", "P"), fresh: Fresh::new() }
    }

    /// `E z. end(z) & atom(z)`; atoms never mention `z` themselves.
    fn at(&mut self, q_end: bool, atom: impl Fn(&str) -> Formula) -> Formula {
        let end = if q_end { &self.end_q } else { &self.end_p };
        let end_z = instantiate(end, &["x"], &["z"], &mut self.fresh);
        Formula::exists("z", end_z.and(atom("z")))
    }

    fn pe(&mut self, atom: impl Fn(&str) -> Formula) -> Formula {
        self.at(false, atom)
    }

    fn qe(&mut self, atom: impl Fn(&str) -> Formula) -> Formula {
        self.at(true, atom)
    }
}

fn dom(e: &mut Ends) -> Formula {
    let off_pe = e.pe(|z| Formula::neq("u", z));
    let off_qe = e.qe(|z| Formula::neq("u", z));
    let cross = Formula::exists_many(
        &["x", "y"],
        and_all([
            pred("P", "x"),
            e.pe(|z| Formula::neq("x", z)),
            pred("Q", "y"),
            e.qe(|z| Formula::neq("y", z)),
            e.qe(|z| beta("x", "u", z)),
            e.pe(|z| beta("y", "u", z)),
        ]),
    );
    and_all([off_pe, off_qe, or_all([pred("P", "u"), pred("Q", "u"), cross])])
}

/// `∀r(β*(u,r,v) → ¬φ_Dom(r))`.
fn nothing_between(e: &mut Ends, dom: &Formula, a: &str, b: &str, r: &str) -> Formula {
    let dom_r = instantiate(dom, &["u"], &[r], &mut e.fresh);
    Formula::forall(r, strict_beta(a, r, b).implies(dom_r.not()))
}

fn step(e: &mut Ends, dom: &Formula, horizontal: bool) -> Formula {
    let (along, q_end) = if horizontal { ("Q", false) } else { ("P", true) };
    let towards = e.at(q_end, |z| strict_beta("u", "v", z));
    let start = Formula::exists("x", and_all([pred(along, "x"), beta("x", "u", "v"), towards]));
    start.and(nothing_between(e, dom, "u", "v", "r"))
}

fn wrap(e: &mut Ends, dom: &Formula, horizontal: bool) -> Formula {
    let (along, q_end) = if horizontal { ("Q", false) } else { ("P", true) };
    let back = e.at(q_end, |z| beta("v", "u", z));
    let dom_x = instantiate(dom, &["u"], &["x"], &mut e.fresh);
    let clear = Formula::forall("x", e.at(q_end, |z| strict_beta("u", "x", z)).implies(dom_x.not()));
    and_all([pred(along, "v"), back, clear])
}

/// `φ_Dom, φ_H, φ_V` of the requested kind; the finite successors add the wrap-around disjunct.
pub fn frame_formulas(kind: FrameKind) -> FrameFormulas {
    let mut e = Ends::new();
    let dom = dom(&mut e);
    let mut h = step(&mut e, &dom, true);
    let mut v = step(&mut e, &dom, false);
    if kind == FrameKind::Finite {
        h = h.or(wrap(&mut e, &dom, true));
        v = v.or(wrap(&mut e, &dom, false));
    }
    FrameFormulas { end_p: e.end_p, end_q: e.end_q, dom, h, v }
}

fn nonsingleton(set: &str) -> Formula {
    Formula::exists_many(&["x", "y"], and_all([pred(set, "x"), pred(set, "y"), Formula::neq("x", "y")]))
}

fn distinct_lines() -> Formula {
    Formula::exists_many(
        &["x", "y", "z"],
        and_all([
            pred("P", "x"),
            pred("P", "y"),
            Formula::neq("x", "y"),
            pred("Q", "z"),
            collinear("x", "y", "z").not(),
        ]),
    )
}

fn finite_frame_class() -> Formula {
    let p = |v: &str| pred("P", v);
    let q = |v: &str| pred("Q", v);
    let origin = Formula::exists(
        "a",
        and_all([
            p("a"),
            q("a"),
            Formula::forall("w", p("w").and(q("w")).implies(Formula::eq("w", "a"))),
            zero_point_with(&p, "a"),
            zero_point_with(&q, "a"),
        ]),
    );
    and_all([sequence_with(&p), sequence_with(&q), origin, nonsingleton("P"), nonsingleton("Q"), distinct_lines()])
}

/// `x` is an endpoint of the set `m` (which contains it): not strictly between
/// members, and every member beyond `x` is approached by members strictly closer.
fn endpoint_of(m: Member, x: &str) -> Formula {
    let inside = Formula::exists_many(&["s", "t"], and_all([m("s"), m("t"), strict_beta("s", x, "t")]));
    let approached = Formula::forall_many(
        &["y", "z"],
        and_all([m("y"), m("z"), strict_beta(x, "y", "z")])
            .implies(Formula::exists("w", m("w").and(strict_beta(x, "w", "y")))),
    );
    and_all([m(x), inside.not(), approached])
}

fn infinite_frame_class() -> Formula {
    let p = |v: &str| pred("P", v);
    let q = |v: &str| pred("Q", v);
    let p_rest = |v: &str| pred("P", v).and(Formula::neq(v, "pe"));
    let q_rest = |v: &str| pred("Q", v).and(Formula::neq(v, "qe"));
    let unique_end = |m: Member, e: &str| {
        endpoint_of(m, e).and(Formula::forall("x", endpoint_of(m, "x").implies(Formula::eq("x", e))))
    };
    let beyond = |rest: Member, e: &str| {
        Formula::exists("a", zero_point_with(rest, "a").and(Formula::forall("q", rest("q").implies(beta("a", "q", e)))))
    };
    let shared_zero = Formula::exists("a", zero_point_with(&p_rest, "a").and(zero_point_with(&q_rest, "a")));
    let lines_meet = Formula::forall_many(
        &["p", "q"],
        and_all([p_rest("p"), q_rest("q")])
            .implies(Formula::exists("w", collinear("p", "qe", "w").and(collinear("q", "pe", "w")))),
    );
    let body = and_all([
        unique_end(&p, "pe"),
        unique_end(&q, "qe"),
        super::omega_like_with(&p_rest),
        super::omega_like_with(&q_rest),
        beyond(&p_rest, "pe"),
        beyond(&q_rest, "qe"),
        shared_zero,
        distinct_lines(),
        lines_meet,
    ]);
    Formula::exists_many(&["pe", "qe"], body)
}

/// `φ_fcf` for [`FrameKind::Finite`], `φ_Cf` for [`FrameKind::Infinite`].
pub fn frame_class_sentence(kind: FrameKind) -> Formula {
    match kind {
        FrameKind::Finite => finite_frame_class(),
        FrameKind::Infinite => infinite_frame_class(),
    }
}
