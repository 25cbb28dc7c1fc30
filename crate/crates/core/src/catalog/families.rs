use crate::bases::{curve_genus_in_surface, rh_genus};
use crate::error::CatalogError;
use crate::motive::{e_curve, e_mul};

use super::{
    e_curve_times_p1, BlowupStep, CenterModel, FamilyKind, FibrationFamily, LieAlgebra, TateOrders,
    TorsionGroup,
};

/// Ids of the fourteen Tate-form gauge families, in table order.
pub const TABLE1_IDS: [&str; 14] = [
    "su2", "su3", "su4", "su5", "usp4", "so3", "so5", "so6", "spin7", "g2", "f4", "tate-e6",
    "tate-e7", "tate-e8",
];

struct TateRow {
    id: &'static str,
    algebra: LieAlgebra,
    orders: [Option<u32>; 5],
    /// `S` lies in `|-k K_B|`; only forced when `s` itself is a Tate
    /// coefficient.
    s_class: i64,
}

const fn o(v: u32) -> Option<u32> {
    Some(v)
}

const TATE_ROWS: [TateRow; 14] = [
    TateRow {
        id: "su2",
        algebra: LieAlgebra::SU(2),
        orders: [None, None, None, o(1), o(2)],
        s_class: 1,
    },
    TateRow {
        id: "su3",
        algebra: LieAlgebra::SU(3),
        orders: [None, None, o(1), o(2), o(3)],
        s_class: 1,
    },
    TateRow {
        id: "su4",
        algebra: LieAlgebra::SU(4),
        orders: [o(0), o(1), None, o(2), o(4)],
        s_class: 1,
    },
    TateRow {
        id: "su5",
        algebra: LieAlgebra::SU(5),
        orders: [o(0), o(1), o(2), o(3), o(5)],
        s_class: 1,
    },
    TateRow {
        id: "usp4",
        algebra: LieAlgebra::USp(4),
        orders: [None, o(0), None, o(3), o(5)],
        s_class: 1,
    },
    // a4 = s, a section of -4K
    TateRow {
        id: "so3",
        algebra: LieAlgebra::SO(3),
        orders: [None, o(0), None, o(1), None],
        s_class: 4,
    },
    // a4 = s^2
    TateRow {
        id: "so5",
        algebra: LieAlgebra::SO(5),
        orders: [None, o(0), None, o(2), None],
        s_class: 2,
    },
    // a2 = s
    TateRow {
        id: "so6",
        algebra: LieAlgebra::SO(6),
        orders: [o(0), o(1), None, o(2), None],
        s_class: 2,
    },
    TateRow {
        id: "spin7",
        algebra: LieAlgebra::Spin(7),
        orders: [None, o(1), None, o(2), o(4)],
        s_class: 1,
    },
    TateRow {
        id: "g2",
        algebra: LieAlgebra::G2,
        orders: [None, None, None, o(2), o(3)],
        s_class: 1,
    },
    TateRow {
        id: "f4",
        algebra: LieAlgebra::F4,
        orders: [None, None, None, o(3), o(4)],
        s_class: 1,
    },
    TateRow {
        id: "tate-e6",
        algebra: LieAlgebra::E6,
        orders: [None, None, o(2), o(3), o(5)],
        s_class: 1,
    },
    TateRow {
        id: "tate-e7",
        algebra: LieAlgebra::E7,
        orders: [None, None, None, o(3), o(5)],
        s_class: 1,
    },
    TateRow {
        id: "tate-e8",
        algebra: LieAlgebra::E8,
        orders: [None, None, None, o(4), o(5)],
        s_class: 1,
    },
];

fn tate_family(row: &TateRow) -> FibrationFamily {
    let [a1, a2, a3, a4, a6] = row.orders;
    let orders = TateOrders { a1, a2, a3, a4, a6 };
    let rank = row.algebra.rank();
    // one blowup per fibral divisor; each center is a curve isomorphic to S
    let resolution = (1..=rank)
        .map(|i| {
            BlowupStep::new(
                3,
                format!("S_{i}"),
                CenterModel::CurveInSurface { k: row.s_class },
            )
        })
        .collect();
    let mw_torsion = if orders.has_two_torsion_section() {
        TorsionGroup::Cyclic(2)
    } else {
        TorsionGroup::Trivial
    };
    FibrationFamily {
        id: row.id.to_string(),
        kind: FamilyKind::TateModel {
            gauge: row.algebra.into(),
            orders,
        },
        mw_rank: 0,
        mw_torsion,
        gamma: rank,
        resolution,
        cy_total_space: true,
        designated_counterexample: false,
    }
}

pub fn table1_families() -> Vec<FibrationFamily> {
    TATE_ROWS.iter().map(tate_family).collect()
}

fn smooth_e_family(id: &str, kind: FamilyKind, mw_rank: u32) -> FibrationFamily {
    let mut resolution = Vec::new();
    if mw_rank >= 1 {
        resolution.push(BlowupStep::new(2, "sigma_1(B)", CenterModel::CopyOfBase));
    }
    if mw_rank >= 2 {
        resolution.push(BlowupStep::new(2, "Bl_C B", CenterModel::BaseBlownUpAlongC));
    }
    FibrationFamily {
        id: id.to_string(),
        kind,
        mw_rank,
        mw_torsion: TorsionGroup::Trivial,
        gamma: 0,
        resolution,
        cy_total_space: true,
        designated_counterexample: false,
    }
}

fn borcea_voisin() -> FibrationFamily {
    let g_c = curve_genus_in_surface(36, -18).expect("genus of C is 10");
    let g_t = rh_genus(3, &[(2, 24)]).expect("triple cover genus is 10");
    let e_s = e_curve_times_p1(g_c);
    let e_t = e_mul(&e_curve(g_c), &e_curve(g_t));
    FibrationFamily {
        id: "borcea-voisin".into(),
        kind: FamilyKind::BorceaVoisin,
        mw_rank: 0,
        mw_torsion: TorsionGroup::Trivial,
        gamma: 2,
        resolution: vec![
            BlowupStep::new(3, "S = C x P1", CenterModel::Fixed(e_s)),
            BlowupStep::new(3, "T = C x T'", CenterModel::Fixed(e_t)),
        ],
        cy_total_space: true,
        designated_counterexample: false,
    }
}

fn k3_product(n: u32) -> FibrationFamily {
    FibrationFamily {
        id: format!("k3xp{n}"),
        kind: FamilyKind::ProductK3 { n },
        mw_rank: 0,
        mw_torsion: TorsionGroup::Trivial,
        gamma: 0,
        resolution: Vec::new(),
        cy_total_space: false,
        designated_counterexample: true,
    }
}

fn surface(product: bool) -> FibrationFamily {
    FibrationFamily {
        id: if product {
            "surface-product"
        } else {
            "surface"
        }
        .into(),
        kind: FamilyKind::SurfaceMinimal { product },
        mw_rank: 0,
        mw_torsion: TorsionGroup::Trivial,
        gamma: 0,
        resolution: Vec::new(),
        cy_total_space: false,
        designated_counterexample: product,
    }
}

/// Every registered family in canonical order.
pub fn families() -> Vec<FibrationFamily> {
    let mut all = table1_families();
    all.push(smooth_e_family("e8", FamilyKind::SmoothWeierstrassE8, 0));
    all.push(smooth_e_family("e7", FamilyKind::E7, 1));
    all.push(smooth_e_family("e6", FamilyKind::E6, 2));
    all.push(borcea_voisin());
    all.extend((1..=3).map(k3_product));
    all.push(surface(false));
    all.push(surface(true));
    all
}

/// Looks a family up by id. `k3xp<n>` is accepted for any `n >= 1`.
pub fn find_family(id: &str) -> Result<FibrationFamily, CatalogError> {
    if let Some(n) = id.strip_prefix("k3xp").and_then(|n| n.parse::<u32>().ok()) {
        if n >= 1 {
            return Ok(k3_product(n));
        }
    }
    families()
        .into_iter()
        .find(|f| f.id == id)
        .ok_or_else(|| CatalogError::UnknownFamily(id.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tate_invariants() {
        let fams = table1_families();
        assert_eq!(fams.len(), 14);
        for f in &fams {
            let FamilyKind::TateModel { gauge, .. } = &f.kind else {
                panic!("{} is not a Tate model", f.id)
            };
            assert_eq!(f.mw_rank, 0);
            assert_eq!(f.gamma, gauge.lie_rank);
            assert_eq!(f.n(), f.gamma as usize);
        }
    }

    #[test]
    fn two_torsion_exactly_for_orthogonal_rows() {
        let torsion: Vec<&str> = table1_families()
            .into_iter()
            .filter(|f| !f.mw_torsion.is_trivial())
            .map(|f| TABLE1_IDS.iter().find(|&&id| id == f.id).copied().unwrap())
            .collect();
        assert_eq!(torsion, ["so3", "so5", "so6"]);
    }

    #[test]
    fn registry_ids_unique_and_findable() {
        let all = families();
        for f in &all {
            assert_eq!(find_family(&f.id).unwrap(), *f);
            assert_eq!(all.iter().filter(|g| g.id == f.id).count(), 1);
        }
        assert_eq!(
            find_family("k3xp7").unwrap().kind,
            FamilyKind::ProductK3 { n: 7 }
        );
        assert!(find_family("k3xp0").is_err());
        assert_eq!(
            find_family("so7"),
            Err(CatalogError::UnknownFamily("so7".into()))
        );
    }

    #[test]
    fn smooth_e_counts() {
        for (id, n) in [("e8", 0), ("e7", 1), ("e6", 2)] {
            let f = find_family(id).unwrap();
            assert_eq!((f.n(), f.gamma, f.mw_rank as usize), (n, 0, n));
        }
    }
}
