//! The representation ring: products of characters under the
//! comultiplication and their decomposition into irreducibles.

use num_traits::{ToPrimitive, Zero};

use crate::exact_math::{solve, Matrix, Vector};
use crate::hopf_core::HopfAlgebra;

use super::AnalysisError;

/// The character of a tensor product of modules:
/// `(χ·φ)(e_i) = Σ d[i][j][k] χ(e_j) φ(e_k)`.
pub fn convolution_product(h: &HopfAlgebra, chi: &Vector, phi: &Vector) -> Vector {
    Vector::from_fn(h.dim, |i| {
        let mut acc = crate::exact_math::GaussianRational::zero();
        for (j, k, c) in h.comult.plane_support(i) {
            if !chi[j].is_zero() && !phi[k].is_zero() {
                acc += &(&(c * &chi[j]) * &phi[k]);
            }
        }
        acc
    })
}

/// Writes a character as a combination of irreducibles, insisting on
/// non-negative integer multiplicities.
pub fn decompose_character(
    irreducibles: &[Vector],
    chi: &Vector,
) -> Result<Vec<i64>, AnalysisError> {
    let basis = Matrix::from_cols(irreducibles);
    let coords = solve(&basis, chi).map_err(|_| {
        AnalysisError::NotIntegral("character outside the span of the irreducibles".into())
    })?;
    let mut out = Vec::with_capacity(irreducibles.len());
    for c in coords.iter() {
        if !c.im.is_zero() {
            return Err(AnalysisError::NotIntegral(format!(
                "complex multiplicity {c}"
            )));
        }
        let m = if c.re.is_integer() {
            c.re.to_integer().to_i64()
        } else {
            None
        };
        match m {
            Some(m) if m >= 0 => out.push(m),
            _ => {
                return Err(AnalysisError::NotIntegral(format!(
                    "multiplicity {c} is not a non-negative integer"
                )))
            }
        }
    }
    Ok(out)
}

/// Multiplication table of the representation ring: entry `[a][b]` lists
/// the multiplicities of each irreducible in `χ_a·χ_b`.
pub fn grothendieck_table(
    h: &HopfAlgebra,
    irreducibles: &[Vector],
) -> Result<Vec<Vec<Vec<i64>>>, AnalysisError> {
    let mut table = Vec::with_capacity(irreducibles.len());
    for a in irreducibles {
        let mut row = Vec::with_capacity(irreducibles.len());
        for b in irreducibles {
            row.push(decompose_character(
                irreducibles,
                &convolution_product(h, a, b),
            )?);
        }
        table.push(row);
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{irreducible_characters, wedderburn};
    use crate::exact_math::GaussianRational;
    use crate::groups::{build_group, group_algebra, GroupSpec};

    #[test]
    fn dihedral_representation_ring() {
        let h = group_algebra(&build_group(&GroupSpec::Dihedral(4)));
        let data = wedderburn(&h).unwrap();
        let chars = irreducible_characters(&h, &data).unwrap();
        let table = grothendieck_table(&h, &chars).unwrap();

        let linear: Vec<usize> = data
            .blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| b.size == 1)
            .map(|(k, _)| k)
            .collect();
        let two = data.blocks.iter().position(|b| b.size == 2).unwrap();

        // π² = sum of all four linear characters.
        let square = &table[two][two];
        assert_eq!(square[two], 0);
        for &l in &linear {
            assert_eq!(square[l], 1);
        }
        // χ·π = π for every linear character χ.
        for &l in &linear {
            let mut expected = vec![0i64; 5];
            expected[two] = 1;
            assert_eq!(table[l][two], expected);
        }
        // Products of linear characters are single linear characters.
        for &a in &linear {
            for &b in &linear {
                let row = &table[a][b];
                assert_eq!(row.iter().sum::<i64>(), 1);
                assert_eq!(row[two], 0);
            }
        }
    }

    #[test]
    fn fractional_or_negative_multiplicities_are_rejected() {
        let h = group_algebra(&build_group(&GroupSpec::Abelian(vec![2])));
        let data = wedderburn(&h).unwrap();
        let chars = irreducible_characters(&h, &data).unwrap();
        let mut half = chars[0].clone();
        half = half.scale(&GaussianRational::rat(1, 2));
        assert!(matches!(
            decompose_character(&chars, &half),
            Err(AnalysisError::NotIntegral(_))
        ));
        let minus = Vector::zeros(2).sub(&chars[0]);
        assert!(matches!(
            decompose_character(&chars, &minus),
            Err(AnalysisError::NotIntegral(_))
        ));
    }
}
