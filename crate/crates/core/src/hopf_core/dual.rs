//! The dual Hopf algebra, by pure transposition of structure constants.
//!
//! Because multiplication and comultiplication are stored with the same
//! index convention (`e_i·e_j = Σ_k c[i][j][k]·e_k` and
//! `Δ(e_i) = Σ_{j,k} d[i][j][k]·e_j⊗e_k`), dualizing never computes
//! anything: the dual product reads the original coproduct sideways and
//! vice versa, the unit and counit trade places, and the antipode
//! transposes.

use super::algebra::HopfAlgebra;

/// Structure constants of `H*` on the dual basis.
///
/// * `(e_i*·e_j*)(e_k) = d[k][i][j]`, so `mult*[i][j][k] = comult[k][i][j]`;
/// * `Δ(e_i*)(e_j⊗e_k) = c[j][k][i]`, so `comult*[i][j][k] = mult[j][k][i]`;
/// * the unit of `H*` is `ε`, the counit is evaluation at `1`;
/// * `S*(f) = f∘S`, i.e. the transposed antipode matrix.
pub fn dual_hopf(h: &HopfAlgebra) -> HopfAlgebra {
    let labels = h
        .basis_labels
        .iter()
        .map(|l| format!("{l}*"))
        .collect::<Vec<_>>();
    HopfAlgebra::new(
        labels,
        h.comult.permute((1, 2, 0)),
        h.counit.clone(),
        h.mult.permute((2, 0, 1)),
        h.unit.clone(),
        h.antipode.as_ref().map(|s| s.transpose()),
    )
}

/// `(commutative, cocommutative)` for the stored structure constants.
pub fn comm_flags(h: &HopfAlgebra) -> (bool, bool) {
    let n = h.dim;
    let mut commutative = true;
    'comm: for i in 0..n {
        for (j, k, v) in h.mult.plane_support(i) {
            if h.mult.get(j, i, k) != v {
                commutative = false;
                break 'comm;
            }
        }
    }
    let mut cocommutative = true;
    'cocomm: for i in 0..n {
        for (j, k, v) in h.comult.plane_support(i) {
            if h.comult.get(i, k, j) != v {
                cocommutative = false;
                break 'cocomm;
            }
        }
    }
    (commutative, cocommutative)
}
