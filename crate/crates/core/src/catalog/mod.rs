//! Fibration families: Mordell–Weil data, fibral divisor counts and the
//! blowups that resolve each Weierstrass model inside its projective bundle.
//!
//! Families are static data. [`resolve`] turns a family plus a base into the
//! E-polynomial of the blown-up ambient bundle; [`resolved_h11`] gives
//! `h^{1,1}` of the resolved fibration from Shioda–Tate–Wazir. The two never
//! share code.

mod families;
mod formulas;

use std::fmt;

use serde::Serialize;

pub use families::{families, find_family, table1_families, TABLE1_IDS};
pub use formulas::{
    borcea_voisin_data, bv_t_factor_genus, chi_smooth_weierstrass_4fold, fourfold_hodge,
    k3_product_counterexample, surface_family_data, BorceaVoisinData, FourfoldHodge, K3ProductData,
    SurfaceData, BV_X_HODGE,
};

use crate::bases::{arithmetic_genus, base_diamond, BaseSpace};
use crate::error::{BaseError, CatalogError};
use crate::motive::{
    e_blowup, e_curve, e_curve_arithmetic, e_mul, e_projective, e_projective_bundle, EPolynomial,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LieAlgebra {
    SU(u32),
    USp(u32),
    SO(u32),
    Spin(u32),
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl LieAlgebra {
    pub fn rank(self) -> u32 {
        match self {
            LieAlgebra::SU(k) => k - 1,
            LieAlgebra::USp(k) => k / 2,
            LieAlgebra::SO(k) | LieAlgebra::Spin(k) => k / 2,
            LieAlgebra::G2 => 2,
            LieAlgebra::F4 => 4,
            LieAlgebra::E6 => 6,
            LieAlgebra::E7 => 7,
            LieAlgebra::E8 => 8,
        }
    }
}

impl fmt::Display for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieAlgebra::SU(k) => write!(f, "SU({k})"),
            LieAlgebra::USp(k) => write!(f, "USp({k})"),
            LieAlgebra::SO(k) => write!(f, "SO({k})"),
            LieAlgebra::Spin(k) => write!(f, "Spin({k})"),
            LieAlgebra::G2 => f.write_str("G2"),
            LieAlgebra::F4 => f.write_str("F4"),
            LieAlgebra::E6 => f.write_str("E6"),
            LieAlgebra::E7 => f.write_str("E7"),
            LieAlgebra::E8 => f.write_str("E8"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaugeData {
    pub group_name: String,
    pub lie_rank: u32,
}

impl From<LieAlgebra> for GaugeData {
    fn from(g: LieAlgebra) -> Self {
        GaugeData {
            group_name: g.to_string(),
            lie_rank: g.rank(),
        }
    }
}

/// Vanishing orders of the Tate coefficients `a1, a2, a3, a4, a6` along the
/// divisor `S`. `None` means the coefficient is absent from the equation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TateOrders {
    pub a1: Option<u32>,
    pub a2: Option<u32>,
    pub a3: Option<u32>,
    pub a4: Option<u32>,
    pub a6: Option<u32>,
}

impl TateOrders {
    /// With `a3 = a6 = 0` the point `x = y = 0` is a section of order two.
    pub fn has_two_torsion_section(&self) -> bool {
        self.a3.is_none() && self.a6.is_none()
    }
}

impl fmt::Display for TateOrders {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |o: Option<u32>| o.map_or("-".to_string(), |v| v.to_string());
        write!(
            f,
            "({}, {}, {}, {}, {})",
            show(self.a1),
            show(self.a2),
            show(self.a3),
            show(self.a4),
            show(self.a6)
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TorsionGroup {
    Trivial,
    Cyclic(u32),
}

impl TorsionGroup {
    pub fn is_trivial(self) -> bool {
        matches!(self, TorsionGroup::Trivial | TorsionGroup::Cyclic(1))
    }
}

impl fmt::Display for TorsionGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorsionGroup::Trivial | TorsionGroup::Cyclic(1) => f.write_str("0"),
            TorsionGroup::Cyclic(n) => write!(f, "Z/{n}"),
        }
    }
}

impl Serialize for TorsionGroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    TateModel {
        gauge: GaugeData,
        orders: TateOrders,
    },
    SmoothWeierstrassE8,
    E7,
    E6,
    BorceaVoisin,
    /// `K3 x P^n` fibred over `P^1 x P^n`.
    ProductK3 {
        n: u32,
    },
    /// Minimal elliptic surface over a curve.
    SurfaceMinimal {
        product: bool,
    },
}

impl FamilyKind {
    pub fn label(&self) -> &'static str {
        match self {
            FamilyKind::TateModel { .. } => "tate",
            FamilyKind::SmoothWeierstrassE8 => "smooth-e8",
            FamilyKind::E7 => "e7",
            FamilyKind::E6 => "e6",
            FamilyKind::BorceaVoisin => "borcea-voisin",
            FamilyKind::ProductK3 { .. } => "k3-product",
            FamilyKind::SurfaceMinimal { .. } => "surface",
        }
    }
}

/// How a blowup center depends on the base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CenterModel {
    /// A curve isomorphic to `S` where `S` is a smooth member of `|-k K_B|`
    /// on a surface base.
    CurveInSurface { k: i64 },
    /// A section of the bundle, isomorphic to `B`.
    CopyOfBase,
    /// `B` blown up along `C = |-2K_B| . |-3K_B|`.
    BaseBlownUpAlongC,
    /// Fixed center with a known polynomial.
    Fixed(EPolynomial),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupStep {
    pub codim: u32,
    pub label: String,
    pub model: CenterModel,
}

impl BlowupStep {
    pub fn new(codim: u32, label: impl Into<String>, model: CenterModel) -> Self {
        assert!(codim >= 2, "blowup centers have codimension >= 2");
        BlowupStep {
            codim,
            label: label.into(),
            model,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibrationFamily {
    pub id: String,
    pub kind: FamilyKind,
    pub mw_rank: u32,
    pub mw_torsion: TorsionGroup,
    pub gamma: u32,
    pub resolution: Vec<BlowupStep>,
    pub cy_total_space: bool,
    /// Expected to violate LTP; a failing verdict is the documented outcome.
    pub designated_counterexample: bool,
}

impl FibrationFamily {
    pub fn n(&self) -> usize {
        self.resolution.len()
    }

    pub fn is_fourfold_kind(&self) -> bool {
        matches!(
            self.kind,
            FamilyKind::SmoothWeierstrassE8 | FamilyKind::E7 | FamilyKind::E6
        )
    }

    /// A base the family is placed over when none is given.
    pub fn default_base(&self) -> BaseSpace {
        match &self.kind {
            FamilyKind::TateModel { .. } => BaseSpace::p2(),
            FamilyKind::SmoothWeierstrassE8 | FamilyKind::E7 | FamilyKind::E6 => {
                BaseSpace::builtin_toric(1).expect("built-in fan 1 is valid")
            }
            FamilyKind::BorceaVoisin => BaseSpace::p2_x_p1(),
            FamilyKind::ProductK3 { n } => BaseSpace::p1_x_pn(*n),
            FamilyKind::SurfaceMinimal { .. } => BaseSpace::curve(0),
        }
    }

    /// Registry record as serialized by `families --format json`.
    pub fn record(&self) -> FamilyRecord {
        let (gauge, rank, tate_orders) = match &self.kind {
            FamilyKind::TateModel { gauge, orders } => (
                Some(gauge.group_name.clone()),
                Some(gauge.lie_rank),
                Some(*orders),
            ),
            _ => (None, None, None),
        };
        FamilyRecord {
            id: self.id.clone(),
            kind: self.kind.label(),
            gauge,
            rank,
            n: self.n(),
            gamma: self.gamma,
            mw_rank: self.mw_rank,
            mw_torsion: self.mw_torsion,
            tate_orders,
            cy_total_space: self.cy_total_space,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyRecord {
    pub id: String,
    pub kind: &'static str,
    pub gauge: Option<String>,
    pub rank: Option<u32>,
    pub n: usize,
    pub gamma: u32,
    pub mw_rank: u32,
    pub mw_torsion: TorsionGroup,
    pub tate_orders: Option<TateOrders>,
    pub cy_total_space: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolvedCenter {
    pub label: String,
    pub codim: u32,
    pub e: EPolynomial,
    /// Set when the center's genus formula goes negative, so `e` is only a
    /// formal stand-in.
    pub virtual_genus: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionSummary {
    pub n: usize,
    pub ambient_dim: usize,
    pub ambient_e: EPolynomial,
    pub centers: Vec<ResolvedCenter>,
}

fn incompatible(
    family: &FibrationFamily,
    base: &BaseSpace,
    reason: impl Into<String>,
) -> CatalogError {
    CatalogError::IncompatibleBase {
        family: family.id.clone(),
        base: base.descriptor(),
        reason: reason.into(),
    }
}

/// Checks that `base` is one the family can be placed over.
pub fn check_compatible(family: &FibrationFamily, base: &BaseSpace) -> Result<(), CatalogError> {
    match &family.kind {
        FamilyKind::TateModel { .. } => {
            if base.k_squared().is_none() {
                return Err(incompatible(family, base, "needs a rational surface base"));
            }
        }
        FamilyKind::SmoothWeierstrassE8 | FamilyKind::E7 | FamilyKind::E6 => {
            if !(2..=3).contains(&base.dim()) {
                return Err(incompatible(
                    family,
                    base,
                    "needs a base of dimension 2 or 3",
                ));
            }
        }
        FamilyKind::BorceaVoisin => {
            let target = e_mul(&e_projective(2), &e_projective(1));
            if base.e_polynomial()? != target {
                return Err(incompatible(family, base, "needs the base P2xP1"));
            }
        }
        FamilyKind::ProductK3 { n } => {
            let target = e_mul(&e_projective(1), &e_projective(*n));
            if base.e_polynomial()? != target {
                return Err(incompatible(
                    family,
                    base,
                    format!("needs the base P1xP{n}"),
                ));
            }
        }
        FamilyKind::SurfaceMinimal { .. } => {
            if !matches!(base, BaseSpace::Curve { .. }) {
                return Err(incompatible(family, base, "needs a curve base"));
            }
        }
    }
    Ok(())
}

fn center_polynomial(
    family: &FibrationFamily,
    step: &BlowupStep,
    base: &BaseSpace,
) -> Result<(EPolynomial, Option<i64>), CatalogError> {
    match &step.model {
        CenterModel::CurveInSurface { k } => {
            let k2 = base
                .k_squared()
                .ok_or_else(|| incompatible(family, base, "needs K^2 of the base"))?;
            let g = arithmetic_genus(k * k * k2, -k * k2)?;
            let virtual_genus = (g < 0).then_some(g);
            Ok((e_curve_arithmetic(g), virtual_genus))
        }
        CenterModel::CopyOfBase => Ok((base.e_polynomial()?, None)),
        CenterModel::BaseBlownUpAlongC => {
            let e_b = base.e_polynomial()?;
            // C is cut out by members of |-2K| and |-3K|
            let (e_c, virtual_genus) = match base.dim() {
                2 => {
                    let k2 = base
                        .k_squared()
                        .ok_or(BaseError::MissingData(base.descriptor(), "K^2"))?;
                    let points = 6 * k2;
                    (
                        EPolynomial::monomial(0, 0, points),
                        (points < 0).then_some(points),
                    )
                }
                3 => {
                    let c1_cubed = base.c1_cubed()?;
                    // 2g - 2 = (K + 2(-K) + 3(-K)) . C = 24 c1^3
                    let g = 1 + 12 * c1_cubed;
                    (e_curve_arithmetic(g), (g < 0).then_some(g))
                }
                d => {
                    return Err(incompatible(
                        family,
                        base,
                        format!("center C is not modelled over a {d}-dimensional base"),
                    ))
                }
            };
            let blown_up = e_blowup(&e_b, &e_c, base.dim() as u32 - 1)?;
            Ok((blown_up, virtual_genus))
        }
        CenterModel::Fixed(e) => Ok((e.clone(), None)),
    }
}

/// Ambient side of the comparison: the projective bundle `P(O + L^2 + L^3)`
/// over `base`, blown up along each center of the family in turn.
pub fn resolve(
    family: &FibrationFamily,
    base: &BaseSpace,
) -> Result<ResolutionSummary, CatalogError> {
    check_compatible(family, base)?;
    let ambient_dim = base.dim() + 2;
    let mut ambient_e = e_projective_bundle(&base.e_polynomial()?, 3);
    let mut centers = Vec::with_capacity(family.resolution.len());
    for step in &family.resolution {
        let (e, virtual_genus) = center_polynomial(family, step, base)?;
        let center_dim = ambient_dim as u32 - step.codim;
        if let Some((p, q)) = e.max_degrees() {
            if p > center_dim || q > center_dim {
                return Err(incompatible(
                    family,
                    base,
                    format!("center '{}' exceeds dimension {center_dim}", step.label),
                ));
            }
        }
        ambient_e = e_blowup(&ambient_e, &e, step.codim)?;
        centers.push(ResolvedCenter {
            label: step.label.clone(),
            codim: step.codim,
            e,
            virtual_genus,
        });
    }
    Ok(ResolutionSummary {
        n: centers.len(),
        ambient_dim,
        ambient_e,
        centers,
    })
}

/// `h^{1,1}` of the resolved total space by Shioda–Tate–Wazir:
/// `h^{1,1}(B) + 1 + Gamma + rank MW`.
pub fn resolved_h11(family: &FibrationFamily, base: &BaseSpace) -> Result<u64, CatalogError> {
    if !family.cy_total_space {
        return Err(CatalogError::NotCalabiYau(family.id.clone()));
    }
    if base.dim() < 2 {
        return Err(CatalogError::SurfaceNotApplicable);
    }
    check_compatible(family, base)?;
    let h11_b = base_diamond(base)?.h(1, 1);
    Ok(h11_b + 1 + u64::from(family.gamma) + u64::from(family.mw_rank))
}

/// Polynomial of a genus `g` curve times `P^1`, used for fixed centers.
pub(crate) fn e_curve_times_p1(g: u32) -> EPolynomial {
    e_mul(&e_curve(g), &e_projective(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::motive::{diamond_from_e, low_degree_hodge_numbers};

    #[test]
    fn lie_ranks() {
        let expected = [
            (LieAlgebra::SU(2), 1),
            (LieAlgebra::SU(5), 4),
            (LieAlgebra::USp(4), 2),
            (LieAlgebra::SO(3), 1),
            (LieAlgebra::SO(5), 2),
            (LieAlgebra::SO(6), 3),
            (LieAlgebra::Spin(7), 3),
            (LieAlgebra::G2, 2),
            (LieAlgebra::E7, 7),
        ];
        for (g, r) in expected {
            assert_eq!(g.rank(), r, "{g}");
        }
    }

    #[test]
    fn so5_ambient_h11() {
        let so5 = find_family("so5").unwrap();
        for k2 in -5..=9 {
            let base = BaseSpace::rational_surface(k2).unwrap();
            let r = resolve(&so5, &base).unwrap();
            assert_eq!(r.n, 2);
            let h = low_degree_hodge_numbers(&r.ambient_e, 3).unwrap();
            assert_eq!(h[&(1, 1)], (10 - k2 + 3) as u64);
            assert_eq!(r.centers[0].virtual_genus.is_some(), k2 <= -2);
        }
    }

    #[test]
    fn e8_ambient_is_the_bundle() {
        let e8 = find_family("e8").unwrap();
        let base = BaseSpace::builtin_toric(1).unwrap();
        let r = resolve(&e8, &base).unwrap();
        assert_eq!(r.n, 0);
        assert_eq!(r.ambient_e, e_projective_bundle(&e_projective(3), 3));
    }

    #[test]
    fn e6_second_center_adds_curve_term() {
        let e6 = find_family("e6").unwrap();
        let base = BaseSpace::builtin_toric(1).unwrap();
        let r = resolve(&e6, &base).unwrap();
        let e_b = e_projective(3);
        // C has genus 1 + 12 * 64
        let e_c = e_curve(769);
        assert_eq!(r.centers[1].e, &e_b + &(&EPolynomial::uv_power(1) * &e_c));
        let d = diamond_from_e(&r.ambient_e, 5).unwrap();
        assert_eq!(d.h(1, 1), 4);
        assert_eq!(d.h(1, 2), 0);
        // h^{p-2,q-2}(C) shows up two steps in: (1,0) of C lands at (3,2)
        assert_eq!(d.h(3, 2), 769);
    }

    #[test]
    fn stw_h11() {
        let p3 = BaseSpace::builtin_toric(1).unwrap();
        let h = |id: &str| resolved_h11(&find_family(id).unwrap(), &p3).unwrap();
        assert_eq!((h("e8"), h("e7"), h("e6")), (2, 3, 4));
        let so5 = find_family("so5").unwrap();
        assert_eq!(resolved_h11(&so5, &BaseSpace::p2()).unwrap(), 4);
        assert_eq!(
            resolved_h11(&find_family("surface").unwrap(), &BaseSpace::curve(1)),
            Err(CatalogError::NotCalabiYau("surface".into()))
        );
    }

    #[test]
    fn incompatible_bases_rejected() {
        let so5 = find_family("so5").unwrap();
        assert!(matches!(
            resolve(&so5, &BaseSpace::builtin_toric(1).unwrap()),
            Err(CatalogError::IncompatibleBase { .. })
        ));
        let bv = find_family("borcea-voisin").unwrap();
        assert!(resolve(&bv, &BaseSpace::builtin_toric(2).unwrap()).is_ok());
        assert!(resolve(&bv, &BaseSpace::builtin_toric(1).unwrap()).is_err());
        let e7 = find_family("e7").unwrap();
        assert!(resolve(&e7, &BaseSpace::curve(2)).is_err());
    }

    #[test]
    fn torsion_display() {
        assert_eq!(TorsionGroup::Cyclic(2).to_string(), "Z/2");
        assert_eq!(TorsionGroup::Trivial.to_string(), "0");
        assert!(TorsionGroup::Cyclic(1).is_trivial());
    }
}
