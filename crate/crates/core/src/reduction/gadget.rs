//! The replacement gadget for a clause with three literals of one sign.
//!
//! A tree on 17 vertices `h0..h16` with maximum degree 3 and three
//! attachment vertices `x = h2`, `y = h6`, `z = h15`, pairwise at even
//! distance (4, 4 and 8) so the host graph stays bipartite. Inside the
//! gadget, totally dominating every gadget edge takes 9 gadget edges when no
//! attachment edge is selected and 8 when at least one is.

use crate::graph::VertexId;

pub const H_VERTICES: usize = 17;

pub const H_EDGES: [(VertexId, VertexId); 16] = [
    (0, 7),
    (1, 0),
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 5),
    (5, 6),
    (7, 8),
    (7, 15),
    (8, 9),
    (8, 12),
    (9, 10),
    (10, 11),
    (12, 13),
    (13, 14),
    (15, 16),
];

/// Attachment vertices x, y, z, matched to the clause literals in order.
pub const H_ATTACH: [VertexId; 3] = [2, 6, 15];

/// Gadget edges used when no attachment edge is selected.
pub const H_PATTERN_NONE: [(VertexId, VertexId); 9] = [
    (0, 7),
    (1, 0),
    (3, 4),
    (4, 5),
    (7, 15),
    (8, 9),
    (8, 12),
    (9, 10),
    (12, 13),
];

/// Gadget edges used when the edge at attachment `i` is selected.
pub const H_PATTERN_ATTACHED: [[(VertexId, VertexId); 8]; 3] = [
    [
        (0, 7),
        (3, 4),
        (4, 5),
        (7, 15),
        (8, 9),
        (8, 12),
        (9, 10),
        (12, 13),
    ],
    [
        (0, 7),
        (2, 3),
        (3, 4),
        (7, 15),
        (8, 9),
        (8, 12),
        (9, 10),
        (12, 13),
    ],
    [
        (0, 7),
        (1, 0),
        (3, 4),
        (4, 5),
        (8, 9),
        (8, 12),
        (9, 10),
        (12, 13),
    ],
];
