mod common;

use betweenness::eval::{expansion_search, EvalBudget};
use betweenness::structure::{build_finite_grid, build_torus};
use betweenness::tiling::{make_tiling_sentence, solve_bounded_grid, solve_torus, TilingCertificate};

#[test]
fn sentence_and_solver_agree_on_small_boards() {
    let budget = EvalBudget::default();
    let corpus = common::two_colour_corpus();
    assert_eq!(corpus.len(), 136);
    for s in corpus.iter().step_by(5) {
        let sentence = make_tiling_sentence(s);
        let preds = s.predicate_names();
        let names: Vec<&str> = preds.iter().map(String::as_str).collect();
        for (m, n) in [(1, 2), (2, 1), (3, 1)] {
            for torus in [true, false] {
                let board = if torus { build_torus(m, n) } else { build_finite_grid(m, n) }.unwrap();
                let solver = if torus { solve_torus(s, m, n) } else { solve_bounded_grid(s, m, n) };
                let logic = expansion_search(&board, &sentence, &names, &budget).unwrap();
                assert_eq!(logic.is_some(), solver.is_some(), "{s:?} on {m}x{n}, torus={torus}");
                if let Some(exp) = logic {
                    let cert = TilingCertificate {
                        assignment: s
                            .tiles()
                            .iter()
                            .flat_map(|(t, _)| exp[&format!("P_{t}")].iter().map(move |e| (e.clone(), t.clone())))
                            .collect(),
                    };
                    assert_eq!(cert.assignment.len(), m * n);
                    cert.check(s, &board).unwrap();
                }
            }
        }
    }
}
