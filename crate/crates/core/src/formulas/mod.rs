//! Constructors for the named betweenness formulas: collinearity, parallelism,
//! flats, open simplices, the finiteness sentence and the weak-to-strong rewriter,
//! plus the sequence and frame formulas in the submodules.
//!
//! Each family is built once over canonical variable names and then instantiated
//! by capture-avoiding substitution, so nested uses rename bound variables to
//! fresh `v0, v1, ...` only where a clash would otherwise occur.

mod frames;
mod sequences;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::logic::{Formula, Fresh, SetRef};

pub use frames::{end_point, frame_class_sentence, frame_formulas, FrameFormulas, FrameKind};
pub use sequences::{omega_like_with, omega_sequence_sentence, sequence_with, zero_point_with};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub(crate) fn beta(s: &str, t: &str, u: &str) -> Formula {
    Formula::rel("beta", &[s, t, u])
}

/// `β*(s,t,u)`, expanded to `beta(s,t,u) & !(s = t) & !(t = u)`.
pub fn strict_beta(s: &str, t: &str, u: &str) -> Formula {
    beta(s, t, u).and(Formula::neq(s, t)).and(Formula::neq(t, u))
}

pub(crate) fn and_all(items: impl IntoIterator<Item = Formula>) -> Formula {
    Formula::conj(items).expect("nonempty conjunction")
}

pub(crate) fn or_all(items: impl IntoIterator<Item = Formula>) -> Formula {
    Formula::disj(items).expect("nonempty disjunction")
}

/// `f` with its parameters `params` replaced by `args`, renaming bound variables
/// of `f` that would capture an argument.
pub fn instantiate(f: &Formula, params: &[&str], args: &[&str], fresh: &mut Fresh) -> Formula {
    assert_eq!(params.len(), args.len(), "parameter/argument count mismatch");
    fresh.avoid_all(f.all_names());
    fresh.avoid_all(args.iter().map(|a| a.to_string()));
    let map: BTreeMap<String, String> =
        params.iter().zip(args).filter(|(p, a)| p != a).map(|(p, a)| (p.to_string(), a.to_string())).collect();
    f.substitute(&map, fresh)
}

pub(crate) fn indexed(stem: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{stem}{i}")).collect()
}

fn refs(v: &[String]) -> Vec<&str> {
    v.iter().map(String::as_str).collect()
}

/// `collinear(x,y,z) := β(x,y,z) ∨ β(x,z,y) ∨ β(y,x,z)`.
pub fn make_collinear() -> Formula {
    collinear("x", "y", "z")
}

pub(crate) fn collinear(x: &str, y: &str, z: &str) -> Formula {
    or_all([beta(x, y, z), beta(x, z, y), beta(y, x, z)])
}

/// `parallel(x,y,t,k)`: the lines through `x,y` and through `t,k` are parallel
/// (equal lines included).
pub fn make_parallel() -> Formula {
    let same_line = collinear("x", "y", "t").and(collinear("x", "y", "k"));
    let no_meet = Formula::exists("z", collinear("x", "y", "z").and(collinear("t", "k", "z"))).not();
    let witness = Formula::exists_many(
        &["z1", "z2"],
        and_all([
            Formula::neq("x", "z1"),
            collinear("x", "y", "z1"),
            collinear("x", "t", "z2"),
            collinear("z1", "z2", "k"),
        ]),
    );
    and_all([Formula::neq("x", "y"), Formula::neq("t", "k"), same_line.or(no_meet.and(witness))])
}

/// `basis_k(x0..xk)` and `flat_k(x0..xk, z)`, built by simultaneous recursion.
pub fn make_basis_and_flat(k: usize) -> (Formula, Formula) {
    let mut fresh = Fresh::new();
    basis_and_flat(k, &mut fresh)
}

fn basis_and_flat(k: usize, fresh: &mut Fresh) -> (Formula, Formula) {
    let xs = indexed("x", k + 1);
    if k == 0 {
        return (Formula::truth("x0"), Formula::eq("x0", "z"));
    }
    let (basis_prev, flat_prev) = basis_and_flat(k - 1, fresh);
    let mut flat_params = refs(&xs[..k]);
    flat_params.push("z");
    let basis = basis_prev.and(instantiate(&flat_prev, &flat_params, &refs(&xs), fresh).not());

    let ys = indexed("y", k + 1);
    let parallel = make_parallel();
    let mut chain = vec![Formula::eq("y0", "x0"), Formula::eq(&ys[k], "z")];
    for i in 0..k {
        let step = instantiate(&parallel, &["x", "y", "t", "k"], &["x0", &xs[i + 1], &ys[i], &ys[i + 1]], fresh);
        chain.push(Formula::eq(&ys[i], &ys[i + 1]).or(step));
    }
    let flat = basis.clone().and(Formula::exists_many(&ys, and_all(chain)));
    (basis, flat)
}

/// `opentriangle_k(x0..xk, z)`: `z` lies strictly inside the simplex `x0..xk`.
pub fn make_opentriangle(k: usize) -> Result<Formula, FormulaError> {
    if k < 1 {
        return Err(FormulaError::InvalidParameter("opentriangle needs k >= 1".into()));
    }
    Ok(opentriangle(k, &mut Fresh::new()))
}

fn opentriangle(k: usize, fresh: &mut Fresh) -> Formula {
    if k == 1 {
        return strict_beta("x0", "z", "x1");
    }
    let xs = indexed("x", k + 1);
    let (basis, _) = basis_and_flat(k, fresh);
    let prev = opentriangle(k - 1, fresh);
    let mut params = refs(&xs[..k]);
    params.push("z");
    let mut args = refs(&xs[..k]);
    args.push("y");
    let inner = instantiate(&prev, &params, &args, fresh);
    basis.and(Formula::exists("y", inner.and(strict_beta("y", "z", &xs[k]))))
}

/// `sepr(x, P)`: some open `n`-simplex around `x` meets `P` at most in `x`.
pub fn make_sepr(n: usize, set: &SetRef) -> Result<Formula, FormulaError> {
    if n < 1 {
        return Err(FormulaError::InvalidParameter("ambient dimension must be >= 1".into()));
    }
    Ok(sepr(n, set, &mut Fresh::new()))
}

fn sepr(n: usize, set: &SetRef, fresh: &mut Fresh) -> Formula {
    let xs = indexed("x", n + 1);
    let ot = opentriangle(n, fresh);
    let mut params = refs(&xs);
    params.push("z");
    let at = |v: &str, fresh: &mut Fresh| {
        let mut args = refs(&xs);
        args.push(v);
        instantiate(&ot, &params, &args, fresh)
    };
    let around_x = at("x", fresh);
    let around_y = at("y", fresh);
    let body = around_x.and(Formula::forall(
        "y",
        around_y.and(Formula::neq("y", "x")).implies(Formula::Member(set.clone(), "y".into()).not()),
    ));
    Formula::exists_many(&xs, body)
}

/// The three conjuncts `φ1, φ2, φ3` of the finiteness sentence.
pub fn finiteness_parts(n: usize, set: &SetRef) -> Result<[Formula; 3], FormulaError> {
    if n < 1 {
        return Err(FormulaError::InvalidParameter("ambient dimension must be >= 1".into()));
    }
    let mut fresh = Fresh::new();
    let member = |v: &str| Formula::Member(set.clone(), v.to_string());
    let sep = sepr(n, set, &mut fresh);
    let phi1 = Formula::forall("x", member("x").not().implies(sep.clone()));
    let phi2 = Formula::forall("x", member("x").implies(sep));

    let xs = indexed("x", n + 1);
    let (basis, _) = basis_and_flat(n, &mut fresh);
    let ot = opentriangle(n, &mut fresh);
    let mut params = refs(&xs);
    params.push("z");
    let mut args = refs(&xs);
    args.push("y");
    let inside = instantiate(&ot, &params, &args, &mut fresh);
    let phi3 = Formula::exists_many(&xs, basis.and(Formula::forall("y", member("y").implies(inside))));
    Ok([phi1, phi2, phi3])
}

/// `φ1 ∧ φ2 ∧ φ3` over the predicate symbol `pred`: in `ℝⁿ`, the set is finite.
pub fn make_finiteness_sentence(n: usize, pred: &str) -> Result<Formula, FormulaError> {
    let [a, b, c] = finiteness_parts(n, &SetRef::Symbol(pred.to_string()))?;
    Ok(a.and(b).and(c))
}

/// `finite(X)` for a set variable `X`.
pub fn finite_set(n: usize, var: &str) -> Result<Formula, FormulaError> {
    let [a, b, c] = finiteness_parts(n, &SetRef::Var(var.to_string()))?;
    Ok(a.and(b).and(c))
}

/// Replaces weak set quantifiers by strong ones guarded by `finite(X)`:
/// `Ew X. ψ` becomes `E2 X. finite(X) & ψ'` and `Aw X. ψ` becomes
/// `A2 X. finite(X) -> ψ'`.
pub fn weak_to_strong(f: &Formula, n: usize) -> Result<Formula, FormulaError> {
    if n < 1 {
        return Err(FormulaError::InvalidParameter("ambient dimension must be >= 1".into()));
    }
    let mut cache: BTreeMap<String, Formula> = BTreeMap::new();
    Ok(f.map_set_quantifiers(&mut |kind, var, weak, body| {
        use crate::logic::SetQuantifier::*;
        if !weak {
            return match kind {
                Exists => Formula::exists_set(var, false, body),
                Forall => Formula::forall_set(var, false, body),
            };
        }
        let fin = cache.entry(var.to_string()).or_insert_with(|| finite_set(n, var).expect("n checked above")).clone();
        match kind {
            Exists => Formula::exists_set(var, false, fin.and(body)),
            Forall => Formula::forall_set(var, false, fin.implies(body)),
        }
    }))
}
