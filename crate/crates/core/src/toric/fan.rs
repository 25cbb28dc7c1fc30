use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{FanError, PolytopeError};
use crate::toric::polytope::{HalfSpace, LatticePolytope3};

pub type Ray = [i64; 3];

/// A fan in a rank-3 lattice given by its rays and maximal (3-dimensional)
/// cones. Cones index into `rays`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fan3 {
    pub name: String,
    pub rays: Vec<Ray>,
    pub cones: Vec<[usize; 3]>,
}

/// Summary of a successful [`validate_fan`] run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FanReport {
    pub rays: usize,
    pub two_cones: usize,
    pub max_cones: usize,
    pub primitive: bool,
    pub smooth: bool,
    pub complete: bool,
}

pub(crate) fn det3(a: Ray, b: Ray, c: Ray) -> i64 {
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
}

fn sub(a: Ray, b: Ray) -> Ray {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

pub(crate) fn cross(a: Ray, b: Ray) -> Ray {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub(crate) fn dot(a: Ray, b: Ray) -> i64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

impl Fan3 {
    pub fn new(name: impl Into<String>, rays: Vec<Ray>, cones: Vec<[usize; 3]>) -> Self {
        Self {
            name: name.into(),
            rays,
            cones,
        }
    }

    /// Fan over the faces of the convex hull of the ray generators.
    ///
    /// For a smooth Fano fan this recovers the maximal cones from the rays
    /// alone. Every face of the hull must be a triangle and the origin must
    /// lie strictly inside.
    pub fn face_fan(name: impl Into<String>, rays: Vec<Ray>) -> Result<Self, FanError> {
        let n = rays.len();
        let mut cones = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let normal = cross(sub(rays[j], rays[i]), sub(rays[k], rays[i]));
                    if normal == [0, 0, 0] {
                        continue;
                    }
                    let side = |v: Ray| dot(normal, sub(v, rays[i])).signum();
                    let others: Vec<i64> = (0..n)
                        .filter(|&l| l != i && l != j && l != k)
                        .map(|l| side(rays[l]))
                        .collect();
                    let origin = side([0, 0, 0]);
                    let supporting = origin != 0 && others.iter().all(|&s| s == origin || s == 0);
                    if !supporting {
                        continue;
                    }
                    if others.contains(&0) {
                        return Err(FanError::Degenerate("non-simplicial"));
                    }
                    let cone = if det3(rays[i], rays[j], rays[k]) > 0 {
                        [i, j, k]
                    } else {
                        [i, k, j]
                    };
                    cones.push(cone);
                }
            }
        }
        if cones.is_empty() {
            return Err(FanError::Degenerate("face"));
        }
        Ok(Self::new(name, rays, cones))
    }

    /// The set of 2-dimensional cones, as sorted ray index pairs.
    pub fn two_cones(&self) -> BTreeSet<(usize, usize)> {
        self.cones
            .iter()
            .flat_map(|c| {
                [(c[0], c[1]), (c[0], c[2]), (c[1], c[2])].map(|(a, b)| (a.min(b), a.max(b)))
            })
            .collect()
    }

    /// Number of cones of each dimension `[d0, d1, d2, d3]`.
    pub fn face_counts(&self) -> [usize; 4] {
        [1, self.rays.len(), self.two_cones().len(), self.cones.len()]
    }

    /// `{y : <y, v> >= -1 for every ray v}`, the polytope of the anticanonical
    /// divisor.
    pub fn dual_polytope(&self) -> Result<LatticePolytope3, PolytopeError> {
        LatticePolytope3::new(
            self.rays
                .iter()
                .map(|&normal| HalfSpace { normal, offset: -1 })
                .collect(),
        )
    }

    pub fn contains_cone(&self, indices: &[usize]) -> bool {
        self.cones
            .iter()
            .any(|c| indices.iter().all(|i| c.contains(i)))
    }
}

/// Checks that `-K` is ample: for every maximal cone, the linear form equal
/// to `-1` on its rays is `> -1` on every other ray.
///
/// Assumes `f` already passed [`validate_fan`].
pub fn check_fano(f: &Fan3) -> Result<(), FanError> {
    for (cone, c) in f.cones.iter().enumerate() {
        let [a, b, d] = c.map(|i| f.rays[i]);
        let det = det3(a, b, d);
        // m solves <m, a> = <m, b> = <m, d> = -1; columns of the inverse are
        // the pairwise cross products divided by det = ±1.
        let (bd, da, ab) = (cross(b, d), cross(d, a), cross(a, b));
        let m: Ray = [0, 1, 2].map(|k| -(bd[k] + da[k] + ab[k]) * det);
        if let Some(ray) = (0..f.rays.len())
            .filter(|i| !c.contains(i))
            .find(|&i| dot(m, f.rays[i]) <= -1)
        {
            return Err(FanError::NotFano { cone, ray });
        }
    }
    Ok(())
}

fn gcd3(v: Ray) -> i64 {
    v[0].gcd(&v[1]).gcd(&v[2])
}

/// Checks primitivity, smoothness and completeness of a fan.
///
/// Completeness is tested combinatorially: every 2-cone lies in exactly two
/// maximal cones which sit on opposite sides of it, every ray is used, and the
/// induced triangulation of the sphere has Euler characteristic 2.
pub fn validate_fan(f: &Fan3) -> Result<FanReport, FanError> {
    for (index, &ray) in f.rays.iter().enumerate() {
        match gcd3(ray) {
            0 => return Err(FanError::ZeroRay { index }),
            1 => {}
            _ => return Err(FanError::NonPrimitive { index, ray }),
        }
    }
    for first in 0..f.rays.len() {
        for second in first + 1..f.rays.len() {
            if f.rays[first] == f.rays[second] {
                return Err(FanError::DuplicateRay { first, second });
            }
        }
    }
    let mut seen = BTreeMap::new();
    for (cone, c) in f.cones.iter().enumerate() {
        if let Some(&index) = c.iter().find(|&&i| i >= f.rays.len()) {
            return Err(FanError::BadIndex { cone, index });
        }
        if c[0] == c[1] || c[0] == c[2] || c[1] == c[2] {
            return Err(FanError::DegenerateCone { cone });
        }
        let mut key = *c;
        key.sort_unstable();
        if let Some(&first) = seen.get(&key) {
            return Err(FanError::DuplicateCone {
                first,
                second: cone,
            });
        }
        seen.insert(key, cone);
        let det = det3(f.rays[c[0]], f.rays[c[1]], f.rays[c[2]]);
        if det.abs() != 1 {
            return Err(FanError::Singular { cone, det });
        }
    }

    let mut incidence: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
    for (cone, c) in f.cones.iter().enumerate() {
        for (a, b, apex) in [(c[0], c[1], c[2]), (c[0], c[2], c[1]), (c[1], c[2], c[0])] {
            incidence
                .entry((a.min(b), a.max(b)))
                .or_default()
                .push((cone, apex));
        }
    }
    for (&(a, b), cones) in &incidence {
        if cones.len() != 2 {
            return Err(FanError::OpenFace(a, b, cones.len()));
        }
        let side = |apex: usize| det3(f.rays[a], f.rays[b], f.rays[apex]).signum();
        if side(cones[0].1) == side(cones[1].1) {
            return Err(FanError::Overlap {
                first: cones[0].0,
                second: cones[1].0,
            });
        }
    }
    for index in 0..f.rays.len() {
        if !f.cones.iter().any(|c| c.contains(&index)) {
            return Err(FanError::UnusedRay { index });
        }
    }
    let [_, v, e, faces] = f.face_counts();
    let euler = v as i64 - e as i64 + faces as i64;
    if euler != 2 {
        return Err(FanError::EulerMismatch(euler));
    }
    Ok(FanReport {
        rays: v,
        two_cones: e,
        max_cones: faces,
        primitive: true,
        smooth: true,
        complete: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Fan3 {
        Fan3::face_fan("P3", vec![[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1]]).unwrap()
    }

    #[test]
    fn projective_space_is_valid() {
        let report = validate_fan(&p3()).unwrap();
        assert_eq!((report.rays, report.two_cones, report.max_cones), (4, 6, 4));
    }

    #[test]
    fn octant_fan() {
        let rays = vec![
            [1, 0, 0],
            [0, 1, 0],
            [0, 0, 1],
            [-1, 0, 0],
            [0, -1, 0],
            [0, 0, -1],
        ];
        let f = Fan3::face_fan("P1xP1xP1", rays).unwrap();
        assert_eq!(validate_fan(&f).unwrap().max_cones, 8);
    }

    #[test]
    fn duplicate_ray_rejected() {
        let mut f = p3();
        f.rays.push([1, 0, 0]);
        assert_eq!(
            validate_fan(&f),
            Err(FanError::DuplicateRay {
                first: 0,
                second: 4
            })
        );
    }

    #[test]
    fn non_primitive_rejected() {
        let mut f = p3();
        f.rays[3] = [-2, -2, -2];
        assert!(matches!(
            validate_fan(&f),
            Err(FanError::NonPrimitive { index: 3, .. })
        ));
    }

    #[test]
    fn singular_cone_rejected() {
        // weighted projective space P(1,1,1,2)
        let f = Fan3::face_fan(
            "P(1,1,1,2)",
            vec![[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -2]],
        )
        .unwrap();
        assert!(matches!(validate_fan(&f), Err(FanError::Singular { .. })));
    }

    #[test]
    fn missing_cone_is_incomplete() {
        let mut f = p3();
        f.cones.pop();
        assert!(matches!(validate_fan(&f), Err(FanError::OpenFace(..))));
    }

    #[test]
    fn bad_index_rejected() {
        let mut f = p3();
        f.cones[0] = [0, 1, 9];
        assert_eq!(
            validate_fan(&f),
            Err(FanError::BadIndex { cone: 0, index: 9 })
        );
    }

    #[test]
    fn fano_check() {
        check_fano(&p3()).unwrap();
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
        validate_fan(&f).unwrap();
        assert!(matches!(check_fano(&f), Err(FanError::NotFano { .. })));
    }

    #[test]
    fn face_fan_rejects_nonsimplicial() {
        // octahedron-dual: cube vertices give square faces
        let rays: Vec<Ray> = (0..8)
            .map(|m| {
                [
                    if m & 1 == 0 { 1 } else { -1 },
                    if m & 2 == 0 { 1 } else { -1 },
                    if m & 4 == 0 { 1 } else { -1 },
                ]
            })
            .collect();
        assert_eq!(
            Fan3::face_fan("cube", rays),
            Err(FanError::Degenerate("non-simplicial"))
        );
    }
}
