use std::fmt::Write as _;

use super::{build_frame, FrameError};
use crate::eval::{eval_sentence, expansion_search_within, satisfying_elements, EvalBudget, EvalError};
use crate::formulas::{frame_class_sentence, FrameKind};
use crate::interpret::Interpretation;
use crate::logic::{Formula, Fresh, SetRef};
use crate::structure::build_torus;
use crate::tiling::{make_tiling_sentence, periodic_sizes, solve_torus, TileSet, TilingCertificate};

/// The sentence true in the plane iff the tile set tiles some torus (finite
/// kind) or the grid (infinite kind): frame predicates and tile predicates are
/// quantified, weakly for the finite kind.
pub fn make_reduction_sentence(s: &TileSet, kind: FrameKind) -> Formula {
    let interp = Interpretation::frame(kind);
    let translated = interp.translate(&make_tiling_sentence(s)).expect("tile predicates avoid P, Q and beta");
    let mut body = frame_class_sentence(kind).and(translated);
    let mut fresh = Fresh::avoiding([&body]);
    let preds = s.predicate_names();
    let mut binders = vec![("P", "X".to_string()), ("Q", "Y".to_string())];
    binders.extend(preds.iter().map(|p| (p.as_str(), p.clone())));
    for (symbol, var) in &binders {
        body = body.replace_set_symbol(symbol, &SetRef::Var(var.clone()), &mut fresh);
    }
    let weak = kind == FrameKind::Finite;
    binders.iter().rev().fold(body, |acc, (_, var)| Formula::exists_set(var, weak, acc))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeOutcome {
    pub m: usize,
    pub n: usize,
    /// The built frame satisfies the finite frame-class sentence.
    pub frame_ok: bool,
    /// Expansion search verdict; `None` when the size was skipped.
    pub logic: Option<bool>,
    pub solver: bool,
    /// The logic witness read as a torus tiling, already re-checked edge by edge.
    pub logic_certificate: Option<TilingCertificate>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionReport {
    pub sizes: Vec<SizeOutcome>,
    /// Logic and solver agree on every completed size.
    pub agreement: bool,
}

fn verdict(v: bool) -> &'static str {
    if v {
        "tilable"
    } else {
        "absent"
    }
}

impl ReductionReport {
    pub fn first_logic_success(&self) -> Option<(usize, usize)> {
        self.sizes.iter().find(|o| o.logic == Some(true)).map(|o| (o.m, o.n))
    }

    pub fn first_solver_success(&self) -> Option<(usize, usize)> {
        self.sizes.iter().find(|o| o.solver).map(|o| (o.m, o.n))
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for o in &self.sizes {
            let logic = o.logic.map_or("skipped", verdict);
            let _ =
                write!(out, "size {}x{}: frame={} logic={logic} solver={}", o.m, o.n, o.frame_ok, verdict(o.solver));
            if let Some(note) = &o.note {
                let _ = write!(out, " ({note})");
            }
            out.push('\n');
        }
        let _ = writeln!(out, "agreement: {}", self.agreement);
        out
    }

    /// One tab-separated row per size under a header, then the agreement flag.
    pub fn summary(&self) -> String {
        let mut out = String::from("m\tn\tframe\tlogic\tsolver\n");
        for o in &self.sizes {
            let logic = o.logic.map_or("skipped", verdict);
            let _ = writeln!(out, "{}\t{}\t{}\t{logic}\t{}", o.m, o.n, o.frame_ok, verdict(o.solver));
        }
        let _ = writeln!(out, "agreement\t{}", self.agreement);
        out
    }
}

/// For every torus size up to `bound`, decides tilability twice: through the
/// frame (expansion search for the tile predicates on the interpreted domain of
/// the translated tiling sentence) and through the direct solver.
pub fn reduce_end_to_end(s: &TileSet, bound: usize, budget: &EvalBudget) -> Result<ReductionReport, FrameError> {
    let interp = Interpretation::frame(FrameKind::Finite);
    let translated = interp.translate(&make_tiling_sentence(s))?;
    let class = frame_class_sentence(FrameKind::Finite);
    let preds = s.predicate_names();
    let pred_refs: Vec<&str> = preds.iter().map(String::as_str).collect();

    let mut sizes = Vec::new();
    for (m, n) in periodic_sizes(bound) {
        let frame = build_frame(m, n)?;
        let st = &frame.structure;
        let solver = solve_torus(s, m, n).is_some();
        let mut outcome =
            SizeOutcome { m, n, frame_ok: false, logic: None, solver, logic_certificate: None, note: None };
        let run = || -> Result<(bool, Option<crate::eval::Expansion>, Vec<usize>), EvalError> {
            let frame_ok = eval_sentence(st, &class, budget)?;
            let domain: Vec<usize> = satisfying_elements(st, &interp.dom().formula, "u", budget)?.into_iter().collect();
            let found = expansion_search_within(st, &translated, &pred_refs, &domain, budget)?;
            Ok((frame_ok, found, domain))
        };
        match run() {
            Ok((frame_ok, found, _)) => {
                outcome.frame_ok = frame_ok;
                outcome.logic = Some(found.is_some());
                if let Some(exp) = found {
                    let cert = TilingCertificate {
                        assignment: s
                            .tiles()
                            .iter()
                            .flat_map(|(tile, _)| {
                                exp[&crate::tiling::pred_name(tile)].iter().map(move |e| (e.clone(), tile.clone()))
                            })
                            .collect(),
                    };
                    if let Err(e) = cert.check(s, &build_torus(m, n)?) {
                        outcome.note = Some(format!("logic witness is not a tiling: {e}"));
                    }
                    outcome.logic_certificate = Some(cert);
                }
            }
            Err(EvalError::BudgetExceeded(msg)) => outcome.note = Some(format!("skipped: {msg}")),
            Err(e) => return Err(e.into()),
        }
        sizes.push(outcome);
    }
    let agreement =
        sizes.iter().filter(|o| o.logic.is_some()).all(|o| o.frame_ok && o.logic == Some(o.solver) && o.note.is_none());
    Ok(ReductionReport { sizes, agreement })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::{parse_formula, print_formula, Vocabulary};
    use crate::tiling::Tile;

    fn set(tiles: &[(&str, [u64; 4])]) -> TileSet {
        TileSet::new(tiles.iter().map(|(n, [t, r, b, l])| (*n, Tile::new(*t, *r, *b, *l)))).unwrap()
    }

    #[test]
    fn known_instances() {
        let b = EvalBudget::default();
        let uniform = reduce_end_to_end(&set(&[("u", [0, 0, 0, 0])]), 2, &b).unwrap();
        assert!(uniform.agreement);
        assert_eq!(uniform.first_logic_success(), Some((1, 1)));
        assert_eq!(uniform.first_solver_success(), Some((1, 1)));

        let stuck = reduce_end_to_end(&set(&[("m", [0, 0, 1, 0])]), 2, &b).unwrap();
        assert!(stuck.agreement);
        assert!(stuck.sizes.iter().all(|o| o.logic == Some(false) && !o.solver));

        let ab = reduce_end_to_end(&set(&[("A", [0, 0, 1, 0]), ("B", [1, 0, 0, 0])]), 2, &b).unwrap();
        assert!(ab.agreement, "{}", ab.render());
        assert_eq!(ab.first_logic_success(), Some((1, 2)));
        assert_eq!(ab.first_solver_success(), Some((1, 2)));
        assert!(ab.render().ends_with("agreement: true\n"));
        assert!(ab.summary().starts_with("m\tn\tframe\tlogic\tsolver\n1\t1\ttrue\tabsent\tabsent\n"));
    }

    #[test]
    fn budget_marks_sizes_skipped() {
        let tight = EvalBudget { max_set_domain: 1, ..EvalBudget::default() };
        let r = reduce_end_to_end(&set(&[("u", [0, 0, 0, 0])]), 2, &tight).unwrap();
        assert_eq!(r.sizes[0].logic, Some(true));
        assert!(r.sizes[1..].iter().all(|o| o.logic.is_none() && o.note.is_some()));
        assert!(r.agreement);
    }

    #[test]
    fn reduction_sentence_shape() {
        let s = set(&[("a", [0, 0, 0, 0]), ("b", [1, 1, 1, 1])]);
        for kind in [FrameKind::Finite, FrameKind::Infinite] {
            let f = make_reduction_sentence(&s, kind);
            assert!(f.is_sentence());
            let voc = f.vocabulary().unwrap();
            assert_eq!(voc.relations().collect::<Vec<_>>(), [("beta", 3)]);
            assert_eq!(voc.sets().count(), 0);
            assert_eq!(f.has_weak_quantifier(), kind == FrameKind::Finite);
            let text = print_formula(&f);
            let prefix =
                if kind == FrameKind::Finite { "Ew X. Ew Y. Ew P_a. Ew P_b. " } else { "E2 X. E2 Y. E2 P_a. E2 P_b. " };
            assert!(text.starts_with(prefix), "{}", &text[..40]);
            let beta = Vocabulary::new().with_relation("beta", 3).unwrap();
            assert_eq!(parse_formula(&text, &beta).unwrap(), f);
        }
    }

    #[test]
    fn reduction_sentence_on_the_smallest_frame() {
        // Three points, so all 2^9 choices of X, Y and the tile set are checked.
        let frame = build_frame(1, 1).unwrap();
        let plain = {
            let s = &frame.structure;
            crate::structure::geometric_structure(
                s.elements().iter().cloned().zip(s.geometry().unwrap().iter().cloned()),
            )
            .unwrap()
        };
        let b = EvalBudget::default();
        let yes = make_reduction_sentence(&set(&[("u", [0, 0, 0, 0])]), FrameKind::Finite);
        assert!(eval_sentence(&plain, &yes, &b).unwrap());
        let no = make_reduction_sentence(&set(&[("m", [0, 0, 1, 0])]), FrameKind::Finite);
        assert!(!eval_sentence(&plain, &no, &b).unwrap());
    }
}
