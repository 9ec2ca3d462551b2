//! Sequence formulas, parameterised by a membership builder so the same
//! constructions serve `P`, a set variable, or `P` minus an endpoint.

use super::{and_all, beta, collinear, strict_beta};
use crate::logic::Formula;

/// Membership builder: `m(v)` states that `v` belongs to the set.
pub type Member<'a> = &'a dyn Fn(&str) -> Formula;

/// Nonempty and collinear.
pub fn sequence_with(m: Member) -> Formula {
    let nonempty = Formula::exists("x", m("x"));
    let collinear_all =
        Formula::forall_many(&["x", "y", "z"], and_all([m("x"), m("y"), m("z")]).implies(collinear("x", "y", "z")));
    nonempty.and(collinear_all)
}

/// Between two distinct members there is a gap free of members next to the first.
pub fn discretely_spaced_with(m: Member) -> Formula {
    let gap = Formula::exists(
        "u",
        and_all([
            Formula::neq("u", "s"),
            beta("s", "u", "t"),
            Formula::forall("r", strict_beta("s", "r", "u").implies(m("r").not())),
        ]),
    );
    Formula::forall_many(&["s", "t"], and_all([m("s"), m("t"), Formula::neq("s", "t")]).implies(gap))
}

/// Some base member sees, beyond every member, a further member.
pub fn discretely_infinite_with(m: Member) -> Formula {
    let beyond = Formula::exists("v", and_all([m("v"), Formula::neq("v", "u"), beta("s", "u", "v")]));
    Formula::exists("s", m("s").and(Formula::forall("u", m("u").implies(beyond))))
}

/// `s` is a member that is not strictly between two other members.
pub fn zero_point_with(m: Member, s: &str) -> Formula {
    let (u, v) = if s == "u" || s == "v" { ("a", "b") } else { ("u", "v") };
    let flanked =
        Formula::exists_many(&[u, v], and_all([m(u), Formula::neq(u, s), m(v), Formula::neq(v, s), beta(u, s, v)]));
    m(s).and(flanked.not())
}

/// Every non-member flanked by members has a member-free gap around it.
pub fn omega_gap_with(m: Member) -> Formula {
    let flank = |a: &str, b: &str| and_all([m(a), Formula::neq(a, "r"), m(b), Formula::neq(b, "r"), beta(a, "r", b)]);
    let empty_between =
        Formula::forall("v", Formula::neq("v", "r").implies(strict_beta("s1", "v", "u1").implies(m("v").not())));
    Formula::forall(
        "r",
        Formula::exists_many(&["s", "u"], flank("s", "u"))
            .implies(Formula::exists_many(&["s1", "u1"], flank("s1", "u1").and(empty_between))),
    )
}

/// The ω-like sequence property of the set described by `m`.
pub fn omega_like_with(m: Member) -> Formula {
    and_all([
        sequence_with(m),
        discretely_spaced_with(m),
        discretely_infinite_with(m),
        Formula::exists("s", zero_point_with(m, "s")),
        omega_gap_with(m),
    ])
}

/// `φ_ω(P)` for the unary symbol `pred`.
pub fn omega_sequence_sentence(pred: &str) -> Formula {
    let p = pred.to_string();
    omega_like_with(&move |v: &str| Formula::pred(&p, v))
}
