use serde::Serialize;

use crate::bases::{base_diamond, c1c2_value, curve_genus_in_surface, rh_genus, BaseSpace};
use crate::error::CatalogError;
use crate::motive::{
    e_curve, e_k3, e_mul, e_projective, e_projective_bundle, EPolynomial, HodgeDiamond,
};

use super::{find_family, resolve, FamilyKind, FibrationFamily};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FourfoldHodge {
    pub h11: i64,
    pub h12: i64,
    pub h13: i64,
    pub h22: i64,
    pub chi: i64,
}

impl FourfoldHodge {
    /// Full diamond of the Calabi–Yau 4-fold.
    pub fn diamond(&self) -> Result<HodgeDiamond, CatalogError> {
        let n = |v: i64| {
            u64::try_from(v)
                .map_err(|_| CatalogError::NonIntegral(format!("negative Hodge number {v}")))
        };
        let (h11, h12, h13, h22) = (n(self.h11)?, n(self.h12)?, n(self.h13)?, n(self.h22)?);
        let rows = vec![
            vec![1, 0, 0, 0, 1],
            vec![0, h11, h12, h13, 0],
            vec![0, h12, h22, h12, 0],
            vec![0, h13, h12, h11, 0],
            vec![1, 0, 0, 0, 1],
        ];
        Ok(HodgeDiamond::new(4, rows)?)
    }
}

fn exact_div(num: i64, den: i64, what: &str) -> Result<i64, CatalogError> {
    if num % den != 0 {
        return Err(CatalogError::NonIntegral(format!("{what}: {num}/{den}")));
    }
    Ok(num / den)
}

fn require_c1c2(base: &BaseSpace) -> Result<(), CatalogError> {
    let c1c2 = c1c2_value(base)?;
    if c1c2 != 24 {
        return Err(CatalogError::ConstraintViolated(c1c2));
    }
    Ok(())
}

/// Hodge numbers of the smooth E8, E7 or E6 Calabi–Yau 4-fold over a
/// 3-dimensional base with `h^{1,2}(B) = 0`.
pub fn fourfold_hodge(
    family: &FibrationFamily,
    base: &BaseSpace,
) -> Result<FourfoldHodge, CatalogError> {
    let a_y: i64 = match family.kind {
        FamilyKind::SmoothWeierstrassE8 => 360,
        FamilyKind::E7 => 144,
        FamilyKind::E6 => 72,
        _ => {
            return Err(CatalogError::IncompatibleBase {
                family: family.id.clone(),
                base: base.descriptor(),
                reason: "4-fold formulas cover the E8, E7 and E6 families only".into(),
            })
        }
    };
    require_c1c2(base)?;
    let d = base_diamond(base)?;
    if d.h(1, 2) != 0 {
        return Err(CatalogError::IncompatibleBase {
            family: family.id.clone(),
            base: base.descriptor(),
            reason: "needs h^{1,2}(B) = 0".into(),
        });
    }
    let c1_cubed = base.c1_cubed()?;
    let h11_b = d.h(1, 1) as i64;
    let n = family.n() as i64;
    let h11 = h11_b + 1 + n;
    let h13 = 39 + exact_div(a_y * c1_cubed, 6, "h^{1,3}")? - h11_b - n;
    let h22 = 204 + exact_div(2 * a_y * c1_cubed, 3, "h^{2,2}")?;
    let chi = 12 * 24 + a_y * c1_cubed;
    Ok(FourfoldHodge {
        h11,
        h12: 0,
        h13,
        h22,
        chi,
    })
}

/// Euler characteristic of a smooth Weierstrass Calabi–Yau 4-fold:
/// `288 + 360 c1(B)^3`.
pub fn chi_smooth_weierstrass_4fold(base: &BaseSpace) -> Result<i64, CatalogError> {
    require_c1c2(base)?;
    Ok(288 + 360 * base.c1_cubed()?)
}

/// `h^{1,1}, h^{2,1}, h^{2,2}, h^{3,1}` of the Borcea–Voisin 4-fold.
pub const BV_X_HODGE: [u64; 4] = [5, 30, 552, 137];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorceaVoisinData {
    pub x_h11: u64,
    pub x_h21: u64,
    pub x_h22: u64,
    pub x_h31: u64,
    pub ambient_h11: u64,
    pub ambient_h12: u64,
    pub genus_c: u32,
    pub genus_t_factor: u32,
    pub centers: Vec<(String, EPolynomial)>,
}

impl BorceaVoisinData {
    pub fn x_diamond(&self) -> HodgeDiamond {
        let (a, b, c, d) = (self.x_h11, self.x_h21, self.x_h22, self.x_h31);
        HodgeDiamond::new(
            4,
            vec![
                vec![1, 0, 0, 0, 1],
                vec![0, a, b, d, 0],
                vec![0, b, c, b, 0],
                vec![0, d, b, a, 0],
                vec![1, 0, 0, 0, 1],
            ],
        )
        .expect("stored diamond is symmetric")
    }
}

/// Genus of the triple cover `T' -> P^1` with `n` points of total
/// ramification and `24 - 2n` simple branch points.
pub fn bv_t_factor_genus(n: u32) -> Result<u32, CatalogError> {
    if n > 12 {
        return Err(CatalogError::NonIntegral(format!(
            "n = {n} exceeds 12 branch points"
        )));
    }
    Ok(rh_genus(3, &[(3, n), (2, 24 - 2 * n)])?)
}

pub fn borcea_voisin_data() -> BorceaVoisinData {
    let family = find_family("borcea-voisin").expect("registered");
    let base = BaseSpace::p2_x_p1();
    let r = resolve(&family, &base).expect("Borcea-Voisin resolves over P2xP1");
    let h = crate::motive::diamond_from_e(&r.ambient_e, r.ambient_dim)
        .expect("ambient is a smooth projective 5-fold");
    let [x_h11, x_h21, x_h22, x_h31] = BV_X_HODGE;
    BorceaVoisinData {
        x_h11,
        x_h21,
        x_h22,
        x_h31,
        ambient_h11: h.h(1, 1),
        ambient_h12: h.h(1, 2),
        genus_c: curve_genus_in_surface(36, -18).expect("C has genus 10"),
        genus_t_factor: bv_t_factor_genus(0).expect("n = 0 is allowed"),
        centers: r.centers.into_iter().map(|c| (c.label, c.e)).collect(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceData {
    pub x_h10: u64,
    pub ambient_h10: u64,
}

fn h10(e: &EPolynomial) -> u64 {
    use num_traits::ToPrimitive;
    e.signed_hodge_number(1, 0)
        .to_u64()
        .expect("h^{1,0} of a product of curves and projective spaces")
}

/// `h^{1,0}` of a minimal elliptic surface over a genus `g` curve and of its
/// ambient bundle. For the product `E x C` the Künneth formula adds one.
pub fn surface_family_data(product: bool, g: u32) -> SurfaceData {
    let x_h10 = if product {
        h10(&e_mul(&e_curve(g), &e_curve(1)))
    } else {
        u64::from(g)
    };
    let ambient_h10 = h10(&e_projective_bundle(&e_curve(g), 3));
    SurfaceData { x_h10, ambient_h10 }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct K3ProductData {
    pub x_h11: u64,
    pub ambient_h11: u64,
}

/// `K3 x P^n` inside the bundle over `P^1 x P^n`.
pub fn k3_product_counterexample(n: u32) -> K3ProductData {
    use num_traits::ToPrimitive;
    let x = e_mul(&e_k3(), &e_projective(n));
    let z = e_projective_bundle(&e_mul(&e_projective(1), &e_projective(n)), 3);
    let h11 = |e: &EPolynomial| e.signed_hodge_number(1, 1).to_u64().expect("small");
    K3ProductData {
        x_h11: h11(&x),
        ambient_h11: h11(&z),
    }
}
