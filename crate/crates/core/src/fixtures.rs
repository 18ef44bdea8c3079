//! Named decorated graphs used throughout the tests and the CLI docs.

use crate::decorated::DecoratedGraph;

/// Dihedral group of order 8 on `a, b, c` with `j_a = (b c)`, `j_b = j_c = id`.
pub fn d4() -> DecoratedGraph {
    DecoratedGraph::from_transpositions(&["a", "b", "c"], &[("a", &[("b", "c")])])
        .expect("valid fixture")
}

/// Rank-5 graph with `j_a = j_c = (b d)`, `j_b = j_d = (a c)`, `j_e = (a c)(b d)`.
pub fn five_simplex() -> DecoratedGraph {
    DecoratedGraph::from_transpositions(
        &["a", "b", "c", "d", "e"],
        &[
            ("a", &[("b", "d")]),
            ("b", &[("a", "c")]),
            ("c", &[("b", "d")]),
            ("d", &[("a", "c")]),
            ("e", &[("a", "c"), ("b", "d")]),
        ],
    )
    .expect("valid fixture")
}

/// Rank-3 graph `j_a = (b c)`, `j_b = (a c)`, `j_c = id`; the seed `(b, a)`
/// is not 4-periodic.
pub fn non_periodic_rank3() -> DecoratedGraph {
    DecoratedGraph::from_transpositions(
        &["a", "b", "c"],
        &[("a", &[("b", "c")]), ("b", &[("a", "c")])],
    )
    .expect("valid fixture")
}
