//! Base spaces of elliptic fibrations and the numbers fibration formulas read
//! off them.

use std::fmt;
use std::str::FromStr;

use crate::error::BaseError;
use crate::motive::{diamond_from_e, e_mul, e_projective, EPolynomial, HodgeDiamond};
use crate::toric::{self, Fan3};

#[derive(Clone, Debug, PartialEq)]
pub enum BaseSpace {
    Curve {
        genus: u32,
    },
    /// A rational surface, known only through `K_B^2`.
    RationalSurface {
        k_squared: i64,
    },
    /// Smooth complete toric 3-fold; `id` is the built-in fan number if any.
    Toric3 {
        id: Option<usize>,
        fan: Fan3,
    },
    Explicit {
        name: String,
        diamond: HodgeDiamond,
        c1_cubed: Option<i64>,
        c1c2: Option<i64>,
    },
}

impl BaseSpace {
    pub fn curve(genus: u32) -> Self {
        BaseSpace::Curve { genus }
    }

    pub fn rational_surface(k_squared: i64) -> Result<Self, BaseError> {
        if k_squared > 9 {
            return Err(BaseError::InvalidKSquared(k_squared));
        }
        Ok(BaseSpace::RationalSurface { k_squared })
    }

    pub fn p2() -> Self {
        BaseSpace::RationalSurface { k_squared: 9 }
    }

    pub fn toric(fan: Fan3) -> Result<Self, BaseError> {
        toric::validate_fan(&fan)?;
        Ok(BaseSpace::Toric3 { id: None, fan })
    }

    pub fn builtin_toric(id: usize) -> Result<Self, BaseError> {
        let fan = toric::builtin_fan(id)?;
        toric::validate_fan(&fan)?;
        Ok(BaseSpace::Toric3 { id: Some(id), fan })
    }

    /// `P^2 x P^1` as an explicit diamond with `c1^3 = 54`, `c1 c2 = 24`.
    pub fn p2_x_p1() -> Self {
        let e = e_mul(&e_projective(2), &e_projective(1));
        BaseSpace::Explicit {
            name: "P2xP1".into(),
            diamond: diamond_from_e(&e, 3).expect("product of projective spaces is pure"),
            c1_cubed: Some(54),
            c1c2: Some(24),
        }
    }

    /// `P^1 x P^n`.
    pub fn p1_x_pn(n: u32) -> Self {
        let e = e_mul(&e_projective(1), &e_projective(n));
        BaseSpace::Explicit {
            name: format!("P1xP{n}"),
            diamond: diamond_from_e(&e, 1 + n as usize)
                .expect("product of projective spaces is pure"),
            c1_cubed: None,
            c1c2: None,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            BaseSpace::Curve { .. } => 1,
            BaseSpace::RationalSurface { .. } => 2,
            BaseSpace::Toric3 { .. } => 3,
            BaseSpace::Explicit { diamond, .. } => diamond.dim(),
        }
    }

    /// Canonical descriptor, parseable by [`FromStr`].
    pub fn descriptor(&self) -> String {
        match self {
            BaseSpace::Curve { genus } => format!("curve:g={genus}"),
            BaseSpace::RationalSurface { k_squared } => format!("rational:K2={k_squared}"),
            BaseSpace::Toric3 { id: Some(id), .. } => format!("toric:{id}"),
            BaseSpace::Toric3 { id: None, fan } => format!("toric:{}", fan.name),
            BaseSpace::Explicit { name, .. } => name.clone(),
        }
    }

    pub fn e_polynomial(&self) -> Result<EPolynomial, BaseError> {
        Ok(base_diamond(self)?.to_e_polynomial())
    }

    /// `c1(B)^3` for 3-dimensional bases.
    pub fn c1_cubed(&self) -> Result<i64, BaseError> {
        match self {
            BaseSpace::Toric3 { fan, .. } => Ok(toric::anticanonical_degree(fan)?),
            BaseSpace::Explicit {
                c1_cubed: Some(c), ..
            } if self.dim() == 3 => Ok(*c),
            BaseSpace::Explicit { .. } if self.dim() == 3 => {
                Err(BaseError::MissingData(self.descriptor(), "c1^3"))
            }
            _ => Err(BaseError::WrongDimension {
                expected: 3,
                found: self.dim(),
            }),
        }
    }

    /// `K_B^2` for rational surfaces.
    pub fn k_squared(&self) -> Option<i64> {
        match self {
            BaseSpace::RationalSurface { k_squared } => Some(*k_squared),
            _ => None,
        }
    }
}

impl fmt::Display for BaseSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor())
    }
}

/// Accepts `P2`, `P3`, `P2xP1`, `P1xP<n>`, `rational:K2=<k>`, `toric:<id>`
/// and `curve:g=<g>`.
impl FromStr for BaseSpace {
    type Err = BaseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_err = || BaseError::Parse(s.to_string());
        let trimmed = s.trim();
        match trimmed {
            "P2" => return Ok(BaseSpace::p2()),
            "P3" => return BaseSpace::builtin_toric(1),
            "P2xP1" => return Ok(BaseSpace::p2_x_p1()),
            _ => {}
        }
        if let Some(n) = trimmed.strip_prefix("P1xP") {
            let n: u32 = n.parse().map_err(|_| parse_err())?;
            if n == 0 {
                return Err(parse_err());
            }
            return Ok(BaseSpace::p1_x_pn(n));
        }
        if let Some(k) = trimmed.strip_prefix("rational:K2=") {
            return BaseSpace::rational_surface(k.parse().map_err(|_| parse_err())?);
        }
        if let Some(id) = trimmed.strip_prefix("toric:") {
            return BaseSpace::builtin_toric(id.parse().map_err(|_| parse_err())?);
        }
        if let Some(g) = trimmed.strip_prefix("curve:g=") {
            return Ok(BaseSpace::curve(g.parse().map_err(|_| parse_err())?));
        }
        Err(parse_err())
    }
}

pub fn base_diamond(b: &BaseSpace) -> Result<HodgeDiamond, BaseError> {
    match b {
        BaseSpace::Curve { genus } => {
            let g = u64::from(*genus);
            Ok(HodgeDiamond::new(1, vec![vec![1, g], vec![g, 1]])?)
        }
        BaseSpace::RationalSurface { k_squared } => {
            if *k_squared > 9 {
                return Err(BaseError::InvalidKSquared(*k_squared));
            }
            // Noether: h^{1,1} = 10 - K^2 when p_g = q = 0
            let h11 = (10 - k_squared) as u64;
            Ok(HodgeDiamond::new(
                2,
                vec![vec![1, 0, 0], vec![0, h11, 0], vec![0, 0, 1]],
            )?)
        }
        BaseSpace::Toric3 { fan, .. } => Ok(toric::toric_hodge(fan)?),
        BaseSpace::Explicit { diamond, .. } => Ok(diamond.clone()),
    }
}

/// Arithmetic genus of a curve `S` on a surface from `S.S` and `S.K`:
/// `2g - 2 = S.(K + S)`.
pub fn arithmetic_genus(s_self: i64, s_k: i64) -> Result<i64, BaseError> {
    let twice = s_self + s_k;
    if twice % 2 != 0 {
        return Err(BaseError::NonIntegral(format!("S.(K+S) = {twice} is odd")));
    }
    Ok(1 + twice / 2)
}

/// Genus of a smooth connected curve `S` on a surface.
pub fn curve_genus_in_surface(s_self: i64, s_k: i64) -> Result<u32, BaseError> {
    let g = arithmetic_genus(s_self, s_k)?;
    u32::try_from(g).map_err(|_| BaseError::Negative(g))
}

/// Riemann–Hurwitz for a degree `degree` cover of `P^1` with ramification
/// given as `(multiplicity, number of points)`:
/// `2g - 2 = -2 degree + sum (multiplicity - 1)`.
pub fn rh_genus(degree: u32, ramification: &[(u32, u32)]) -> Result<u32, BaseError> {
    let excess: i64 = ramification
        .iter()
        .map(|&(mult, count)| (i64::from(mult) - 1) * i64::from(count))
        .sum();
    if excess % 2 != 0 {
        return Err(BaseError::NonIntegral(format!(
            "total ramification {excess} is odd"
        )));
    }
    let g = 1 - i64::from(degree) + excess / 2;
    u32::try_from(g).map_err(|_| BaseError::Negative(g))
}

/// Whether a 3-dimensional base satisfies `c1(B) c2(B) = 24`.
pub fn check_c1c2_constraint(b: &BaseSpace) -> Result<bool, BaseError> {
    if b.dim() != 3 {
        return Err(BaseError::WrongDimension {
            expected: 3,
            found: b.dim(),
        });
    }
    match b {
        BaseSpace::Toric3 { fan, .. } => Ok(toric::c1c2(fan)? == 24),
        BaseSpace::Explicit { c1c2: Some(v), .. } => Ok(*v == 24),
        _ => Err(BaseError::MissingData(b.descriptor(), "c1 c2")),
    }
}

/// `c1(B) c2(B)` for a 3-dimensional base.
pub fn c1c2_value(b: &BaseSpace) -> Result<i64, BaseError> {
    match b {
        BaseSpace::Toric3 { fan, .. } => Ok(toric::c1c2(fan)?),
        BaseSpace::Explicit { c1c2: Some(v), .. } if b.dim() == 3 => Ok(*v),
        _ if b.dim() != 3 => Err(BaseError::WrongDimension {
            expected: 3,
            found: b.dim(),
        }),
        _ => Err(BaseError::MissingData(b.descriptor(), "c1 c2")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_surface_diamonds() {
        assert_eq!(base_diamond(&BaseSpace::p2()).unwrap().h(1, 1), 1);
        let d = base_diamond(&BaseSpace::rational_surface(8).unwrap()).unwrap();
        assert_eq!((d.h(1, 1), d.h(1, 0), d.h(2, 0)), (2, 0, 0));
        for k2 in -10..=9 {
            let d = base_diamond(&BaseSpace::rational_surface(k2).unwrap()).unwrap();
            assert_eq!(d.euler_char(), 12 - k2);
        }
        assert_eq!(
            BaseSpace::rational_surface(10),
            Err(BaseError::InvalidKSquared(10))
        );
    }

    #[test]
    fn toric_base_diamond() {
        let d = base_diamond(&BaseSpace::builtin_toric(2).unwrap()).unwrap();
        assert_eq!((d.h(1, 1), d.h(1, 2)), (2, 0));
        assert_eq!(d, base_diamond(&BaseSpace::p2_x_p1()).unwrap());
    }

    #[test]
    fn curve_diamond() {
        let d = base_diamond(&BaseSpace::curve(4)).unwrap();
        assert_eq!((d.h(0, 0), d.h(1, 0), d.h(0, 1), d.h(1, 1)), (1, 4, 4, 1));
    }

    #[test]
    fn genus_in_surface() {
        for k2 in 0..=9 {
            // S in |-2K|: S.S = 4K^2, S.K = -2K^2
            assert_eq!(
                curve_genus_in_surface(4 * k2, -2 * k2).unwrap(),
                (k2 + 1) as u32
            );
        }
        assert_eq!(curve_genus_in_surface(1, -3).unwrap(), 0);
        assert_eq!(curve_genus_in_surface(36, -18).unwrap(), 10);
        assert!(matches!(
            curve_genus_in_surface(1, -2),
            Err(BaseError::NonIntegral(_))
        ));
        assert_eq!(curve_genus_in_surface(-8, -4), Err(BaseError::Negative(-5)));
    }

    #[test]
    fn riemann_hurwitz() {
        for n in 0..=12 {
            assert_eq!(rh_genus(3, &[(3, n), (2, 24 - 2 * n)]).unwrap(), 10);
        }
        assert_eq!(rh_genus(1, &[]).unwrap(), 0);
        assert_eq!(rh_genus(2, &[(2, 4)]).unwrap(), 1);
        assert!(matches!(
            rh_genus(2, &[(2, 3)]),
            Err(BaseError::NonIntegral(_))
        ));
        assert_eq!(rh_genus(3, &[]), Err(BaseError::Negative(-2)));
    }

    #[test]
    fn c1c2_constraint() {
        assert!(check_c1c2_constraint(&BaseSpace::builtin_toric(1).unwrap()).unwrap());
        for id in 1..=18 {
            assert!(check_c1c2_constraint(&BaseSpace::builtin_toric(id).unwrap()).unwrap());
        }
        let bad = BaseSpace::Explicit {
            name: "bad".into(),
            diamond: base_diamond(&BaseSpace::p2_x_p1()).unwrap(),
            c1_cubed: Some(54),
            c1c2: Some(48),
        };
        assert!(!check_c1c2_constraint(&bad).unwrap());
        assert_eq!(
            check_c1c2_constraint(&BaseSpace::p2()),
            Err(BaseError::WrongDimension {
                expected: 3,
                found: 2
            })
        );
    }

    #[test]
    fn descriptors_round_trip() {
        for s in ["rational:K2=5", "toric:7", "P2xP1", "curve:g=3", "P1xP2"] {
            let b: BaseSpace = s.parse().unwrap();
            assert_eq!(b.descriptor(), s);
        }
        assert_eq!("P2".parse::<BaseSpace>().unwrap(), BaseSpace::p2());
        assert_eq!("P3".parse::<BaseSpace>().unwrap().descriptor(), "toric:1");
        for bad in [
            "P4",
            "toric:0",
            "toric:19",
            "rational:K2=10",
            "curve:g=-1",
            "P1xP0",
        ] {
            assert!(bad.parse::<BaseSpace>().is_err(), "{bad}");
        }
    }

    #[test]
    fn no_holomorphic_forms_on_any_base() {
        let bases = [
            BaseSpace::p2(),
            BaseSpace::rational_surface(-3).unwrap(),
            BaseSpace::p2_x_p1(),
            BaseSpace::builtin_toric(17).unwrap(),
        ];
        for b in &bases {
            let d = base_diamond(b).unwrap();
            for k in 1..=d.dim() {
                assert_eq!(d.h(0, k), 0, "{b}");
            }
        }
    }
}
