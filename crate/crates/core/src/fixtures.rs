//! Named example trees used by the examples, tests and the verify harness.

use crate::plumbing::RootedTree;

/// Single vertex of weight 0.
pub fn t0() -> RootedTree {
    RootedTree::single("v", 0)
}

/// Root of weight −1 joined to a −3 leaf.
pub fn t1() -> RootedTree {
    RootedTree::from_spec(&[("a", -1), ("b", -3)], &[("a", "b")], "a").expect("valid fixture")
}

/// Chain −2, −2, −6, −1 from the root, with leaves −2 and −3 on the −1 vertex.
pub fn ta() -> RootedTree {
    RootedTree::from_spec(
        &[
            ("v1", -2),
            ("v2", -2),
            ("v3", -6),
            ("v4", -1),
            ("v5", -2),
            ("v6", -3),
        ],
        &[
            ("v1", "v2"),
            ("v2", "v3"),
            ("v3", "v4"),
            ("v4", "v5"),
            ("v4", "v6"),
        ],
        "v1",
    )
    .expect("valid fixture")
}

/// Root −2 on a −3 vertex carrying a −2 leaf and a −1 vertex with leaves −2
/// and −3.
pub fn tb() -> RootedTree {
    RootedTree::from_spec(
        &[
            ("v", -2),
            ("c", -3),
            ("a", -2),
            ("m", -1),
            ("d", -2),
            ("e", -3),
        ],
        &[("v", "c"), ("c", "a"), ("c", "m"), ("m", "d"), ("m", "e")],
        "v",
    )
    .expect("valid fixture")
}

/// All named fixtures with their names.
pub fn all() -> Vec<(&'static str, RootedTree)> {
    vec![("T0", t0()), ("T1", t1()), ("TA", ta()), ("TB", tb())]
}
