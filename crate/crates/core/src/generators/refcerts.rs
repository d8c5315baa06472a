//! Reference certificate trees and their published final polynomials for
//! the shipped datasets, encoded as vertex-token strings. A `TreeSpec`
//! names relations by (sign, S, quad) and edges by (color support,
//! endpoint, endpoint); final polynomials are lists of bracket monomials,
//! each bracket an oriented vertex sequence, all with coefficient +1.

/// A certificate tree over vertex tokens.
#[derive(Debug, Clone, Copy)]
pub struct TreeSpec {
    /// (sign, S tokens, quad tokens) per relation node.
    pub nodes: &'static [(i8, &'static str, &'static str)],
    /// (shared-solid support tokens, node index, node index) per edge.
    pub edges: &'static [(&'static str, usize, usize)],
}

/// Single-relation certificate tree of the 8-vertex example sphere.
pub const EXAMPLE_TREE: TreeSpec = TreeSpec {
    nodes: &[
        (1, "0 4 5", "1 2 6 7"),
    ],
    edges: &[
    ],
};

/// Four-relation path certifying non-realizability of Delta^3_6.
pub const D36_TREE: TreeSpec = TreeSpec {
    nodes: &[
        (1, "1 2 4", "~1 ~5 6 ~6"),
        (1, "1 ~1 ~6", "2 4 ~4 ~5"),
        (1, "~1 ~4 ~6", "1 ~2 4 5"),
        (-1, "1 ~4 ~6", "~1 2 ~2 5"),
    ],
    edges: &[
        ("1 ~1 2 4 ~6", 0, 1),
        ("1 ~1 4 ~4 ~6", 1, 2),
        ("1 ~1 ~4 5 ~6", 2, 3),
    ],
};

/// Six-relation tree certifying non-realizability of Zheng's sphere.
pub const ZHENG_TREE: TreeSpec = TreeSpec {
    nodes: &[
        (-1, "1 8 f", "4 6 b e"),
        (1, "1 8 f", "5 6 b d"),
        (1, "1 b f", "3 4 d e"),
        (1, "1 b f", "4 8 d e"),
        (-1, "3 b f", "1 4 6 d"),
        (1, "3 b f", "1 5 6 e"),
    ],
    edges: &[
        ("1 3 b d f", 2, 4),
        ("1 3 b e f", 2, 5),
        ("1 8 b d f", 1, 3),
        ("1 8 b e f", 0, 3),
        ("1 b d e f", 2, 3),
    ],
};

/// Three-relation tree certifying non-realizability of prismatoid #1039.
pub const P1039_TREE: TreeSpec = TreeSpec {
    nodes: &[
        (1, "0 1 4 5", "a d e f"),
        (1, "0 1 4 d", "5 b c f"),
        (1, "0 4 5 d", "1 b c e"),
    ],
    edges: &[
        ("0 1 4 5 d e", 0, 2),
        ("0 1 4 5 b d", 1, 2),
    ],
};

/// Three-relation tree certifying non-realizability of prismatoid #1963.
pub const P1963_TREE: TreeSpec = TreeSpec {
    nodes: &[
        (-1, "0 2 5 f", "4 6 c g"),
        (-1, "0 5 c f", "1 2 6 b"),
        (1, "2 5 c f", "0 1 b e"),
    ],
    edges: &[
        ("0 2 5 6 c f", 0, 1),
        ("0 2 5 b c f", 1, 2),
    ],
};

/// Three-relation tree certifying non-realizability of prismatoid #2669. The drawn node -Γ(23ad|04df) repeats d and cannot be a relation; the quad 14ce is the unique one consistent with the eliminated edge [1234ad] and the published final polynomial.
pub const P2669_TREE: TreeSpec = TreeSpec {
    nodes: &[
        (-1, "2 3 a b", "0 4 d f"),
        (-1, "2 3 a d", "1 4 c e"),
        (1, "2 4 a d", "1 3 b c"),
    ],
    edges: &[
        ("2 3 4 a b d", 0, 2),
        ("1 2 3 4 a d", 1, 2),
    ],
};

/// Three-relation tree certifying non-realizability of prismatoid #3513.
/// The drawn node Γ(14ag|02cf) is inconsistent with both printed edge
/// colors; the quad 02bf is the unique one consistent with them and with
/// the published final polynomial.
pub const P3513_TREE: TreeSpec = TreeSpec {
    nodes: &[
        (1, "1 4 a g", "0 2 b f"),
        (1, "1 4 b g", "0 2 5 a"),
        (-1, "4 a b g", "1 3 c f"),
    ],
    edges: &[
        ("1 2 4 a b g", 1, 0),
        ("1 4 a b f g", 2, 0),
    ],
};

/// Nine relations of the forbidden-facet certificate for the Delta^3_n family; the tree edges are reconstructed by `derive_edges`.
pub const THMJ_NODES: TreeSpec = TreeSpec {
    nodes: &[
        (1, "1 2 4", "3 ~3 ~4 5"),
        (1, "1 2 4", "~3 ~4 5 ~6"),
        (-1, "1 2 ~6", "~1 4 ~4 5"),
        (1, "~1 2 4", "1 3 ~3 ~6"),
        (1, "2 5 ~6", "1 ~1 3 ~4"),
        (1, "~1 2 4", "1 3 ~5 6"),
        (-1, "2 3 ~6", "~1 4 ~4 5"),
        (1, "~1 ~4 ~6", "1 2 ~2 5"),
        (-1, "1 ~4 ~6", "~1 2 ~2 5"),
    ],
    edges: &[
    ],
};

/// The 28 relations of the Delta^4_7 certificate; edge endpoints are in `NZ47_EDGE_ENDPOINTS` and colors are reconstructed by `derive_edges`.
pub const NZ47_NODES: TreeSpec = TreeSpec {
    nodes: &[
        (-1, "1 ~2 ~3 6", "4 ~4 5 ~7"),
        (1, "1 ~2 ~3 6", "~4 5 ~5 ~7"),
        (1, "1 ~2 5 6", "~3 4 ~4 ~7"),
        (-1, "1 ~3 4 5", "~2 6 7 ~7"),
        (-1, "1 ~3 6 7", "~2 4 ~4 ~6"),
        (1, "~1 ~2 ~3 5", "~4 ~5 6 ~7"),
        (-1, "~1 ~2 ~3 ~5", "4 ~4 5 ~7"),
        (-1, "~1 ~2 ~3 6", "1 4 5 ~5"),
        (1, "~2 3 5 6", "1 ~3 4 ~7"),
        (-1, "~2 3 5 6", "~1 ~3 4 ~7"),
        (1, "~2 ~3 4 5", "1 ~1 ~5 ~7"),
        (-1, "~2 ~3 4 6", "1 ~1 3 5"),
        (1, "~2 ~3 ~4 6", "1 4 ~5 7"),
        (-1, "~2 ~3 ~4 6", "1 5 ~6 ~7"),
        (1, "~2 ~3 ~4 6", "1 ~5 ~6 ~7"),
        (1, "~2 ~3 ~4 ~6", "1 ~1 6 7"),
        (-1, "~2 ~3 ~4 ~6", "1 6 7 ~7"),
        (1, "~2 ~3 5 6", "1 ~1 3 ~4"),
        (1, "~2 ~3 5 6", "1 3 ~4 ~5"),
        (1, "~2 ~3 5 6", "1 3 ~4 ~7"),
        (1, "~2 ~3 5 6", "~1 3 4 ~4"),
        (1, "~2 ~3 5 6", "~1 4 ~4 ~7"),
        (1, "~2 ~3 5 6", "3 ~4 ~5 ~7"),
        (1, "~2 ~3 ~5 ~7", "1 4 ~4 5"),
        (-1, "~2 ~3 ~5 ~7", "1 ~4 5 6"),
        (-1, "~2 ~3 6 7", "4 ~4 ~5 ~6"),
        (1, "~3 6 ~6 7", "1 ~2 ~4 ~5"),
        (-1, "4 5 6 ~7", "1 ~2 3 ~3"),
    ],
    edges: &[
    ],
};

/// Edge endpoints of the 28-node Delta^4_7 tree.
pub const NZ47_EDGE_ENDPOINTS: &[(usize, usize)] = &[
    (20, 8), (8, 22), (22, 24), (24, 23), (23, 10), (10, 3), (3, 27), (27, 2), (2, 1), (1, 14), (14, 15), (15, 26), (26, 25), (25, 16), (16, 13), (13, 0), (0, 19), (19, 9), (9, 11), (22, 18), (27, 21), (21, 5), (5, 7), (7, 17), (5, 6), (26, 4), (4, 12),
];

/// Final polynomial of the example-sphere certificate: three positive monomials.
pub const EXAMPLE_FINAL: &[&[&str]] = &[
    &["0 1 4 2 5", "0 5 6 7 4"],
    &["0 4 6 5 1", "2 4 7 5 0"],
    &["0 1 5 7 4", "2 4 5 6 0"],
];

/// Final polynomial of the Delta^3_6 certificate: six degree-5 monomials.
pub const D36_FINAL: &[&[&str]] = &[
    &["~1 2 4 ~5 1", "1 ~4 ~6 ~5 ~1", "1 2 ~6 ~4 ~2", "1 2 6 4 ~6", "~1 ~2 ~6 ~4 5"],
    &["1 2 6 4 ~1", "1 ~4 ~6 ~5 ~1", "1 2 ~6 ~4 ~2", "1 2 ~5 ~6 4", "~1 ~2 ~6 ~4 5"],
    &["1 2 ~6 ~4 ~1", "1 2 ~5 ~6 ~1", "1 2 6 4 ~5", "1 ~2 ~4 5 ~6", "~1 ~2 ~6 ~4 4"],
    &["1 2 ~6 ~4 ~1", "~1 4 ~6 ~5 1", "1 2 ~6 ~4 ~2", "1 2 6 4 ~5", "~1 ~2 ~6 ~4 5"],
    &["1 2 ~5 ~6 ~1", "~1 ~2 ~6 ~4 1", "1 2 ~6 ~4 ~2", "1 2 6 4 ~5", "~1 4 5 ~6 ~4"],
    &["1 2 ~5 ~6 ~1", "~1 ~2 ~6 ~4 1", "1 2 6 4 ~5", "1 2 ~6 ~4 5", "~1 ~2 ~6 ~4 4"],
];

/// Final polynomial of the Zheng-sphere certificate: eight degree-7 monomials.
pub const ZHENG_FINAL: &[&[&str]] = &[
    &["1 4 b f 3", "1 6 f 8 4", "1 4 b f 8", "1 4 b f e", "1 6 f 8 5", "3 6 f b 5", "3 6 f b d"],
    &["1 4 b f 3", "1 6 f 8 4", "1 4 b f e", "1 5 f b 8", "1 6 f 8 d", "3 6 f b 4", "3 6 f b 5"],
    &["1 4 b f 3", "1 6 f 8 4", "1 4 b f e", "1 5 8 d f", "1 6 f 8 b", "3 6 f b 4", "3 6 f b 5"],
    &["1 4 b f 3", "1 4 b f 8", "1 4 b f d", "1 6 f 8 5", "1 6 f 8 e", "3 6 f b 4", "3 6 f b 5"],
    &["1 4 b f 3", "1 4 e 8 f", "1 4 b f d", "1 6 f 8 5", "1 6 f 8 b", "3 6 f b 4", "3 6 f b 5"],
    &["1 5 f b 3", "1 6 f 8 4", "1 4 b f 8", "1 4 b f d", "1 6 f 8 5", "3 6 f b 4", "3 6 f b e"],
    &["3 6 f b 1", "1 6 f 8 4", "1 4 b f 8", "1 4 b f d", "1 6 f 8 5", "3 6 f b 4", "3 5 b e f"],
    &["3 6 f b 1", "1 6 f 8 4", "1 4 b f 8", "1 4 b f e", "1 6 f 8 5", "3 4 d b f", "3 6 f b 5"],
];

/// Final polynomial of the #1039 certificate.
pub const P1039_FINAL: &[&[&str]] = &[
    &["0 1 4 a d 5", "0 1 4 f 5 e", "0 1 4 d c f", "0 4 b d c 5"],
    &["0 1 4 e a 5", "0 1 4 f 5 d", "0 1 4 d c f", "0 4 b d c 5"],
    &["0 1 4 f 5 a", "0 1 4 d c 5", "0 1 4 b f d", "0 5 c d e 4"],
    &["0 1 4 f 5 a", "0 1 4 d c 5", "0 1 4 d c f", "0 5 b e d 4"],
    &["0 1 4 f 5 a", "0 1 4 f 5 d", "0 4 b d c 1", "0 5 c d e 4"],
];

/// Final polynomial of the #1963 certificate.
pub const P1963_FINAL: &[&[&str]] = &[
    &["1 2 5 f c 0", "0 1 5 f c 6", "0 2 4 5 f g", "2 5 b e c f"],
    &["1 2 5 f c 0", "0 2 4 5 f g", "0 6 b f c 5", "1 2 5 f c e"],
    &["0 1 5 f c 6", "0 2 4 5 f g", "0 2 5 c e f", "1 2 5 f c b"],
    &["0 1 5 f c b", "0 2 4 5 f 6", "0 2 5 g c f", "1 2 5 f c e"],
    &["0 1 5 f c b", "0 2 4 5 f c", "0 2 5 6 g f", "1 2 5 f c e"],
];

/// Final polynomial of the #2669 certificate.
pub const P2669_FINAL: &[&[&str]] = &[
    &["0 2 3 4 a b", "1 4 a c d 2", "2 3 a b f d", "2 3 a c d e"],
    &["0 2 3 a d b", "1 4 a c d 2", "2 4 a f b 3", "2 3 a c d e"],
    &["2 3 a b f 0", "2 3 a c d 1", "2 3 4 e a d", "4 a b d c 2"],
    &["2 3 a b f 0", "1 2 3 a e d", "2 3 a c d 4", "4 a b d c 2"],
    &["2 3 a b f 0", "1 4 a d b 2", "2 3 a c d 4", "2 3 a c d e"],
];

/// Final polynomial of the #3513 certificate.
pub const P3513_FINAL: &[&[&str]] = &[
    &["0 1 4 g a 2", "0 1 4 b g 5", "1 3 a g b 4", "4 a b c g f"],
    &["0 1 4 g a 2", "0 1 4 b g 5", "4 a b c g 1", "3 a b g f 4"],
    &["0 1 4 b g 2", "0 1 4 g a f", "1 5 a b g 4", "4 a b c g 3"],
    &["0 1 4 b g 5", "0 4 a b g 1", "1 2 4 a f g", "4 a b c g 3"],
    &["0 4 a b g 1", "0 1 4 g a f", "1 2 5 b g 4", "4 a b c g 3"],
];

/// Final polynomial of the forbidden-facet Delta^3_n family certificate; two unknown solids survive squared.
pub const THMJ_FINAL: &[&[&str]] = &[
    &["~1 2 ~3 4 1", "~1 ~2 ~6 ~4 1", "1 2 ~6 ~4 ~2", "1 2 4 ~3 3", "1 2 4 ~3 ~4", "1 2 ~6 ~4 5", "2 3 ~6 ~4 ~1", "~1 2 4 ~5 6", "3 4 ~6 5 2", "2 3 ~6 ~4 5"],
    &["~1 2 ~3 4 1", "~1 ~2 ~6 ~4 1", "1 2 ~6 ~4 ~2", "1 2 4 ~3 3", "1 2 4 ~3 ~4", "1 2 ~6 ~4 5", "~1 3 ~6 5 2", "~1 2 4 ~5 6", "2 3 ~6 ~4 4", "2 3 ~6 ~4 5"],
    &["~1 2 4 ~5 1", "~1 ~2 ~6 ~4 1", "1 2 ~6 ~4 ~2", "1 2 4 ~3 3", "1 2 4 ~3 ~4", "1 2 ~6 ~4 5", "2 3 6 4 ~1", "~1 2 ~3 4 ~6", "2 3 ~6 ~4 5", "2 3 ~6 ~4 5"],
    &["1 2 6 4 ~1", "~1 ~2 ~6 ~4 1", "1 2 ~6 ~4 ~2", "1 2 4 ~3 3", "1 2 4 ~3 ~4", "1 2 ~6 ~4 5", "2 3 4 ~5 ~1", "~1 2 ~3 4 ~6", "2 3 ~6 ~4 5", "2 3 ~6 ~4 5"],
    &["1 2 ~6 ~4 ~1", "~1 ~2 ~6 ~4 1", "1 2 ~6 ~4 ~2", "1 2 4 ~3 3", "1 2 4 ~3 5", "1 2 ~6 ~4 4", "~1 2 ~3 4 3", "~1 2 4 ~5 6", "2 3 ~6 ~4 5", "2 3 ~6 ~4 5"],
    &["1 2 ~6 ~4 ~1", "~1 ~2 ~6 ~4 1", "1 2 ~6 ~4 ~2", "1 2 ~4 3 4", "1 2 4 ~3 5", "1 2 4 ~3 ~6", "~1 2 ~3 4 3", "~1 2 4 ~5 6", "2 3 ~6 ~4 5", "2 3 ~6 ~4 5"],
    &["1 2 ~6 ~4 ~1", "~1 ~2 ~6 ~4 1", "1 2 ~6 ~4 ~2", "1 2 3 5 4", "1 2 4 ~3 ~4", "1 2 4 ~3 ~6", "~1 2 ~3 4 3", "~1 2 4 ~5 6", "2 3 ~6 ~4 5", "2 3 ~6 ~4 5"],
    &["1 2 ~6 ~4 ~1", "1 2 ~6 ~4 ~2", "1 2 4 ~3 3", "1 2 3 5 ~6", "1 2 4 ~3 ~4", "1 2 ~6 ~4 4", "~1 2 ~3 4 3", "~1 2 4 ~5 6", "~1 ~2 ~6 ~4 5", "2 3 ~6 ~4 5"],
    &["1 2 ~6 ~4 ~1", "1 2 4 ~3 3", "1 2 3 5 ~6", "1 2 4 ~3 ~4", "1 2 ~6 ~4 4", "1 ~2 ~4 5 ~6", "~1 ~2 ~6 ~4 2", "~1 2 ~3 4 3", "~1 2 4 ~5 6", "2 3 ~6 ~4 5"],
    &["~1 ~2 ~6 ~4 1", "1 2 ~6 ~4 ~2", "1 2 4 ~3 3", "1 2 4 ~3 ~4", "1 2 ~6 ~4 4", "1 2 ~6 ~4 5", "~1 2 ~3 4 3", "~1 3 ~6 5 2", "~1 2 4 ~5 6", "2 3 ~6 ~4 5"],
    &["~1 ~2 ~6 ~4 1", "1 2 4 ~3 3", "1 2 3 5 ~6", "1 2 4 ~3 ~4", "1 2 ~6 ~4 4", "1 2 ~6 ~4 5", "~1 ~2 ~6 ~4 2", "~1 2 ~3 4 3", "~1 2 4 ~5 6", "2 3 ~6 ~4 5"],
];
