//! Smooth complete toric 3-folds: fan checks, Hodge numbers, anticanonical
//! degree and section counts.

mod data;
mod fan;
mod polytope;

pub use data::{
    builtin_fan, builtin_fans, load_fan, parse_fan_json, FAN_DIR_ENV, NUM_BUILTIN_FANS,
};
pub use fan::{check_fano, validate_fan, Fan3, FanReport, Ray};
pub use polytope::{lattice_points, HalfSpace, LatticePolytope3, Point};

use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{PolytopeError, ToricError};
use crate::motive::HodgeDiamond;

fn binomial(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Even Betti numbers `[b0, b2, b4, b6]` from the cone counts `d_j`:
/// `b_{2k} = sum_{i >= k} (-1)^{i-k} C(i, k) d_{3-i}`.
pub fn betti_numbers(f: &Fan3) -> [i64; 4] {
    let d = f.face_counts().map(|c| c as i64);
    [0, 1, 2, 3].map(|k| {
        (k..=3)
            .map(|i| {
                let sign = if (i - k) % 2 == 0 { 1 } else { -1 };
                sign * binomial(i, k) * d[(3 - i) as usize]
            })
            .sum()
    })
}

/// Hodge diamond of the toric 3-fold: `h^{p,p} = b_{2p}`, all other entries
/// vanish.
pub fn toric_hodge(f: &Fan3) -> Result<HodgeDiamond, ToricError> {
    validate_fan(f)?;
    let b = betti_numbers(f);
    let mut rows = vec![vec![0u64; 4]; 4];
    for p in 0..4 {
        rows[p][p] = u64::try_from(b[p]).expect("Betti numbers of a complete smooth fan are >= 0");
    }
    Ok(HodgeDiamond::new(3, rows)?)
}

/// `(-K)^3 = 3! vol(P)` where `P = {y : <y, v_i> >= -1}`.
pub fn anticanonical_degree(f: &Fan3) -> Result<i64, ToricError> {
    validate_fan(f)?;
    check_fano(f)?;
    let six_vol = f.dual_polytope()?.volume() * num_rational::BigRational::from_integer(6.into());
    if !six_vol.is_integer() {
        return Err(PolytopeError::NonIntegralDegree(six_vol.to_string()).into());
    }
    Ok(six_vol.to_integer().to_i64().expect("degree fits in i64"))
}

/// `c1 c2 = 24 chi(O_B)`; `h^{0,k} = 0` for `k > 0` on a smooth complete toric
/// variety so this is 24.
pub fn c1c2(f: &Fan3) -> Result<i64, ToricError> {
    let d = toric_hodge(f)?;
    let chi_o: i64 = (0..=3)
        .map(|k| {
            let h = d.h(0, k) as i64;
            if k.is_even() {
                h
            } else {
                -h
            }
        })
        .sum();
    Ok(24 * chi_o)
}

/// `h^0(Z, -K_Z)` for `Z = P(O + w^-2 + w^-3)` over a base, given a way to
/// count `h^0(B, w_B^{-k})`.
///
/// Sections of `-K_Z` are cubic forms in the fibre coordinates `x, y, z`;
/// the coefficient of `x^a y^b z^c` is a section of `w_B^{-(6 - 2a - 3b)}`.
pub fn weierstrass_bundle_sections<E>(
    mut h0_anticanonical_power: impl FnMut(u32) -> Result<u64, E>,
) -> Result<u64, E> {
    let mut total = 0;
    for a in 0..=3i64 {
        for b in 0..=3 - a {
            let k = 6 - 2 * a - 3 * b;
            if k >= 0 {
                total += h0_anticanonical_power(k as u32)?;
            }
        }
    }
    Ok(total)
}

/// `h^0(Z, -K_Z)` over a toric Fano base; each summand counts lattice points
/// of a dilate of the anticanonical polytope.
pub fn weierstrass_anticanonical_h0(base: &Fan3) -> Result<u64, ToricError> {
    validate_fan(base)?;
    check_fano(base)?;
    let p = base.dual_polytope()?;
    weierstrass_bundle_sections(|k| Ok::<_, ToricError>(p.dilate(k).lattice_points()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hodge_of_small_fans() {
        assert_eq!(toric_hodge(&builtin_fan(1).unwrap()).unwrap().h(1, 1), 1);
        let d = toric_hodge(&builtin_fan(2).unwrap()).unwrap();
        assert_eq!((d.h(1, 1), d.h(1, 2)), (2, 0));
        let d = toric_hodge(&builtin_fan(17).unwrap()).unwrap();
        assert_eq!(d.h(1, 1), 5);
    }

    #[test]
    fn betti_symmetry_and_picard_rank() {
        for (id, f) in builtin_fans() {
            let b = betti_numbers(&f);
            assert_eq!(b[0], 1, "fan ({id})");
            assert_eq!(b[1], b[2], "fan ({id})");
            assert_eq!(b[1], f.rays.len() as i64 - 3, "fan ({id})");
        }
    }

    #[test]
    fn degrees_of_first_fans() {
        let deg: Vec<i64> = (1..=4)
            .map(|i| anticanonical_degree(&builtin_fan(i).unwrap()).unwrap())
            .collect();
        assert_eq!(deg, [64, 54, 56, 62]);
    }

    #[test]
    fn c1c2_is_24() {
        for (_, f) in builtin_fans() {
            assert_eq!(c1c2(&f).unwrap(), 24);
        }
    }

    #[test]
    fn section_count_over_p3() {
        assert_eq!(
            weierstrass_anticanonical_h0(&builtin_fan(1).unwrap()).unwrap(),
            4551
        );
    }

    #[test]
    fn section_count_monomials() {
        // over P^1 with w^-1 = O(2): h^0(O(2k)) = 2k + 1
        let total = weierstrass_bundle_sections(|k| Ok::<_, ()>(2 * u64::from(k) + 1)).unwrap();
        let by_hand: u64 = [6, 4, 3, 2, 1, 0, 0].iter().map(|k| 2 * k + 1).sum();
        assert_eq!(total, by_hand);
        // x^2 y has weight 6 - 4 - 3 < 0 and is never requested
        let mut asked = Vec::new();
        weierstrass_bundle_sections(|k| {
            asked.push(k);
            Ok::<_, ()>(0)
        })
        .unwrap();
        asked.sort_unstable();
        assert_eq!(asked, [0, 0, 1, 2, 3, 4, 6]);
    }

    #[test]
    fn dual_polytope_dilates_of_p3() {
        let p = builtin_fan(1).unwrap().dual_polytope().unwrap();
        assert_eq!(p.dilate(2).lattice_points(), 165);
        assert_eq!(p.dilate(4).lattice_points(), 969);
    }

    #[test]
    fn non_fano_input_rejected() {
        let f = Fan3::new(
            "F3xP1",
            vec![
                [1, 0, 0],
                [0, 1, 0],
                [-1, 3, 0],
                [0, -1, 0],
                [0, 0, 1],
                [0, 0, -1],
            ],
            vec![
                [0, 1, 4],
                [1, 2, 4],
                [2, 3, 4],
                [3, 0, 4],
                [1, 0, 5],
                [2, 1, 5],
                [3, 2, 5],
                [0, 3, 5],
            ],
        );
        assert!(matches!(
            anticanonical_degree(&f),
            Err(ToricError::Fan(crate::error::FanError::NotFano { .. }))
        ));
        assert!(weierstrass_anticanonical_h0(&f).is_err());
        assert_eq!(c1c2(&f).unwrap(), 24);
    }

    #[test]
    fn builtin_fans_are_fano() {
        for (_, f) in builtin_fans() {
            check_fano(&f).unwrap();
        }
    }
}
