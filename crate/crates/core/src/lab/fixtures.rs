//! Published tables for `Δ(R_8)`, `Δ^2(R_8)` and `Δ^3(R_8)`.
//!
//! Vectors are e-coordinates in `Z^7`. Two printed table entries disagree
//! with direct expansion; the corrected value is stored and the printed one
//! is kept next to it as an [`Erratum`].

use serde::{Deserialize, Serialize};

/// Coordinates of an element of `Δ(R_8)` on `e_1..e_7`.
pub type E7 = [i64; 7];

const fn e(c: [i64; 7]) -> E7 {
    c
}

/// A printed entry that differs from recomputation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Erratum {
    pub table: String,
    pub row: String,
    pub column: String,
    pub printed: String,
    pub corrected: String,
}

/// `e_i * e_j` for `i = 1..7`, `j = 1..3`, corrected.
pub const E_PRODUCTS: [[E7; 3]; 7] = [
    // e1
    [e([1, -1, 0, 0, 0, 0, -1]), e([0, 0, 1, -1, 0, 0, -1]), e([0, 0, 0, 0, 1, -1, -1])],
    // e2
    [e([0, -1, 0, 0, 0, -1, 0]), e([0, 1, 0, -1, 0, -1, 0]), e([0, 0, 0, 1, 0, -2, 0])],
    // e3
    [e([0, -1, 0, 0, -1, 0, 1]), e([1, 0, 0, -1, -1, 0, 0]), e([0, 0, 1, 0, -1, -1, 0])],
    // e4
    [e([0, -1, 0, -1, 0, 1, 0]), e([0, 0, 0, -2, 0, 0, 0]), e([0, 1, 0, -1, 0, -1, 0])],
    // e5
    [e([0, -1, -1, 0, 1, 0, 0]), e([0, 0, -1, -1, 0, 0, 1]), e([1, 0, -1, 0, 0, -1, 0])],
    // e6
    [e([0, -2, 0, 1, 0, 0, 0]), e([0, -1, 0, -1, 0, 1, 0]), e([0, -1, 0, 0, 0, -1, 0])],
    // e7
    [e([-1, -1, 1, 0, 0, 0, 0]), e([-1, 0, 0, -1, 1, 0, 0]), e([-1, 0, 0, 0, 0, -1, 1])],
];

/// Printed value of `e_2 * e_3`.
pub const E2_E3_PRINTED: E7 = [0, 0, 0, 0, 0, -2, 0];

/// The Z-basis `u_1..u_6` of `Δ^2(R_8)`.
pub const B2: [E7; 6] = [
    [1, -1, 0, 0, 0, 0, -1],
    [0, 1, 0, 0, 0, 1, 0],
    [0, 0, 1, -1, 0, 0, -1],
    [0, 0, 0, 1, 0, 2, 0],
    [0, 0, 0, 0, 1, -1, -1],
    [0, 0, 0, 0, 0, 4, 0],
];

/// `u_i * e_j` for `i = 1..6`, `j = 1..3`, corrected.
pub const U_PRODUCTS: [[E7; 3]; 6] = [
    // u1
    [[2, 1, -1, 0, 0, 1, -1], [1, -1, 1, 1, -1, 1, -1], [1, 0, 0, -1, 1, 2, -2]],
    // u2
    [[0, -3, 0, 1, 0, -1, 0], [0, 0, 0, -2, 0, 0, 0], [0, -1, 0, 1, 0, -3, 0]],
    // u3
    [[1, 1, -1, 1, -1, -1, 1], [2, 0, 0, 2, -2, 0, 0], [1, -1, 1, 1, -1, 1, -1]],
    // u4
    [[0, -5, 0, 1, 0, 1, 0], [0, -2, 0, -4, 0, 2, 0], [0, -1, 0, -1, 0, -3, 0]],
    // u5
    [[1, 2, -2, -1, 1, 0, 0], [1, 1, -1, 1, -1, -1, 1], [2, 1, -1, 0, 0, 1, -1]],
    // u6
    [[0, -8, 0, 4, 0, 0, 0], [0, -4, 0, -4, 0, 4, 0], [0, -4, 0, 0, 0, -4, 0]],
];

/// Printed value of `u_4 * e_1`.
pub const U4_E1_PRINTED: E7 = [0, -5, 0, -1, 0, 1, 0];

/// The Z-basis `v_1..v_6` of `Δ^3(R_8)`.
pub const B3: [E7; 6] = [
    [1, -1, 1, 1, -1, 1, -1],
    [0, 1, -1, -2, 2, 1, -1],
    [0, 0, -1, -1, 2, -2, -1],
    [0, 0, 0, -2, 0, 0, 0],
    [0, 0, 0, 0, -4, -4, 4],
    [0, 0, 0, 0, 0, 8, 0],
];

/// Coefficients of `v_i` on `u_1..u_6` exactly as printed. Several rows
/// do not reproduce the `v_i` above; only lattice-level statements are
/// derived from this table.
pub const B3_IN_B2_PRINTED: [[i64; 6]; 6] = [
    [1, 0, 0, 2, -1, -1],
    [0, 1, -1, -1, 2, 1],
    [0, 0, -1, -2, 2, 1],
    [0, 0, 0, 2, 0, -1],
    [0, 0, 0, 0, -4, 0],
    [0, 0, 0, 0, 0, 2],
];

/// Invariant factors of `Δ^2(R_8) / Δ^3(R_8)`.
pub const QUOTIENT_TORSION: [i64; 2] = [4, 4];
pub const QUOTIENT_ORDER: i64 = 16;

pub fn errata() -> Vec<Erratum> {
    use crate::ring::format_terms;
    vec![
        Erratum {
            table: "e_i * e_j".into(),
            row: "e2".into(),
            column: "e3".into(),
            printed: format_terms("e", 1, &E2_E3_PRINTED),
            corrected: format_terms("e", 1, &E_PRODUCTS[1][2]),
        },
        Erratum {
            table: "u_i * e_j".into(),
            row: "u4".into(),
            column: "e1".into(),
            printed: format_terms("e", 1, &U4_E1_PRINTED),
            corrected: format_terms("e", 1, &U_PRODUCTS[3][0]),
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn errata_render_as_terms() {
        let errata = errata();
        assert_eq!(errata[0].printed, "-2e6");
        assert_eq!(errata[0].corrected, "e4 - 2e6");
        assert_eq!(errata[1].printed, "-5e2 - e4 + e6");
        assert_eq!(errata[1].corrected, "-5e2 + e4 + e6");
    }

    #[test]
    fn printed_presentation_is_not_signed_exact() {
        // v_4 = -2e_4 but 2u_4 - u_6 = 2e_4
        let combo: Vec<i64> = (0..7).map(|c| (0..6).map(|r| B3_IN_B2_PRINTED[3][r] * B2[r][c]).sum()).collect();
        assert_eq!(combo, vec![0, 0, 0, 2, 0, 0, 0]);
        assert_ne!(combo, B3[3].to_vec());
    }
}
