use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::presentation::GammaGroup;
use crate::euler::EulerValue;

/// Invariant factors of an integer matrix: the nonzero diagonal entries of
/// its Smith normal form, positive and in divisibility order.
#[allow(clippy::needless_range_loop)] // rows t and i are read together
pub fn invariant_factors(matrix: &[Vec<i64>]) -> Vec<BigInt> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut diag = Vec::new();

    for t in 0..rows.min(cols) {
        loop {
            // pivot: smallest nonzero magnitude in the trailing block
            let Some((pi, pj)) = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| !a[i][j].is_zero())
                .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()))
            else {
                return finish(diag);
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }

            let mut clean = true;
            for i in (t + 1)..rows {
                let q = a[i][t].div_floor(&a[t][t]);
                if !q.is_zero() {
                    for j in t..cols {
                        let d = &q * &a[t][j];
                        a[i][j] -= d;
                    }
                }
                clean &= a[i][t].is_zero();
            }
            for j in (t + 1)..cols {
                let q = a[t][j].div_floor(&a[t][t]);
                if !q.is_zero() {
                    for i in t..rows {
                        let d = &q * &a[i][t];
                        a[i][j] -= d;
                    }
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            // divisibility: fold an offending row into the pivot row and retry
            let offender = ((t + 1)..rows).find(|&i| ((t + 1)..cols).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
            match offender {
                Some(i) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    finish(diag)
}

fn finish(mut diag: Vec<BigInt>) -> Vec<BigInt> {
    diag.retain(|d| !d.is_zero());
    diag
}

/// `Γ^ab ≅ Z^rank ⊕ ⨁ Z/t_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Abelianization {
    pub rank: usize,
    /// Torsion coefficients `t_i ≥ 2`, each dividing the next.
    pub torsion: Vec<BigInt>,
}

pub fn abelianization(gamma: &GammaGroup) -> Abelianization {
    let p = gamma.to_presentation();
    let factors = invariant_factors(&p.exponent_matrix());
    let rank = p.generator_count() - factors.len();
    let torsion = factors.into_iter().filter(|d| !d.is_one()).collect();
    Abelianization { rank, torsion }
}

/// `|Hom(Γ, Z/m)|`, read off the abelianization: `m^rank · Π gcd(t_i, m)`.
pub fn count_homs_to_cyclic(gamma: &GammaGroup, m: u64) -> EulerValue {
    let ab = abelianization(gamma);
    let m = BigInt::from(m);
    let mut count = num_traits::pow(m.clone(), ab.rank);
    for t in &ab.torsion {
        count *= t.gcd(&m);
    }
    count.into()
}

/// `χ(Hom(Γ, S¹))`: zero when `Hom(Γ,S¹)` contains a torus factor, otherwise
/// the finite cardinality `Π t_i`.
pub fn chi_hom_to_circle(gamma: &GammaGroup) -> EulerValue {
    let ab = abelianization(gamma);
    if ab.rank >= 1 {
        return EulerValue::zero();
    }
    ab.torsion.iter().fold(BigInt::one(), |acc, t| acc * t).into()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn abelianization_examples() {
        let z2 = GammaGroup::presented(2, vec![vec![1, 2, -1, -2]]).unwrap();
        assert_eq!(
            abelianization(&z2),
            Abelianization {
                rank: 2,
                torsion: vec![]
            }
        );
        let c4 = GammaGroup::cyclic(4).unwrap();
        assert_eq!(
            abelianization(&c4),
            Abelianization {
                rank: 0,
                torsion: big(&[4])
            }
        );
        let klein = GammaGroup::presented(2, vec![vec![1, 1], vec![2, 2], vec![1, 2, 1, 2]]).unwrap();
        assert_eq!(
            abelianization(&klein),
            Abelianization {
                rank: 0,
                torsion: big(&[2, 2])
            }
        );
    }

    #[test]
    fn snf_divisibility_order() {
        // diag(4, 6) ~ diag(2, 12)
        assert_eq!(invariant_factors(&[vec![4, 0], vec![0, 6]]), big(&[2, 12]));
        assert_eq!(
            invariant_factors(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]),
            big(&[2, 6, 12])
        );
        assert_eq!(invariant_factors(&[vec![0, 0], vec![0, 0]]), big(&[]));
        assert_eq!(invariant_factors(&[]), big(&[]));
    }

    #[test]
    fn circle_homs() {
        assert_eq!(chi_hom_to_circle(&GammaGroup::ZPow(3)), EulerValue::zero());
        assert_eq!(chi_hom_to_circle(&GammaGroup::Free(2)), EulerValue::zero());
        assert_eq!(chi_hom_to_circle(&GammaGroup::cyclic(4).unwrap()), EulerValue::from(4));
        // Z/2 x Z/3 ≅ Z/6
        let g = GammaGroup::presented(2, vec![vec![1, 1], vec![2, 2, 2], vec![1, 2, -1, -2]]).unwrap();
        assert_eq!(chi_hom_to_circle(&g), EulerValue::from(6));
        // trivial group
        let t = GammaGroup::presented(1, vec![vec![1]]).unwrap();
        assert_eq!(chi_hom_to_circle(&t), EulerValue::one());
    }

    #[test]
    fn cyclic_hom_counts() {
        assert_eq!(
            count_homs_to_cyclic(&GammaGroup::cyclic(4).unwrap(), 6),
            EulerValue::from(2)
        );
        assert_eq!(count_homs_to_cyclic(&GammaGroup::ZPow(3), 5), EulerValue::from(125));
        assert_eq!(
            count_homs_to_cyclic(&GammaGroup::cyclic(3).unwrap(), 2),
            EulerValue::one()
        );
    }
}
