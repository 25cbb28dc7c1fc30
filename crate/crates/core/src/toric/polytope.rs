//! Exact 3-dimensional polytopes given by integer half-spaces.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::PolytopeError;
use crate::toric::fan::{cross, det3, dot, Ray};

/// The closed half-space `<normal, y> >= offset`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HalfSpace {
    pub normal: Ray,
    pub offset: i64,
}

impl HalfSpace {
    fn contains_int(&self, y: [i64; 3]) -> bool {
        dot(self.normal, y) >= self.offset
    }

    fn slack(&self, y: &Point) -> BigRational {
        let lhs: BigRational = (0..3)
            .map(|i| &y[i] * BigRational::from_integer(self.normal[i].into()))
            .sum();
        lhs - BigRational::from_integer(self.offset.into())
    }
}

pub type Point = [BigRational; 3];

/// Bounded, full-dimensional polytope with its exact rational vertices.
#[derive(Clone, Debug, PartialEq)]
pub struct LatticePolytope3 {
    halfspaces: Vec<HalfSpace>,
    vertices: Vec<Point>,
}

fn rational(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn solve3(rows: [HalfSpace; 3]) -> Option<Point> {
    let [a, b, c] = rows.map(|h| h.normal);
    let det = det3(a, b, c);
    if det == 0 {
        return None;
    }
    // Cramer's rule on N y = offsets
    let rhs = rows.map(|h| h.offset);
    let column = |k: usize| {
        let mut m = [a, b, c];
        for (row, value) in m.iter_mut().zip(rhs) {
            row[k] = value;
        }
        det3(m[0], m[1], m[2])
    };
    Some([0, 1, 2].map(|k| BigRational::new(column(k).into(), det.into())))
}

fn minus(a: &Point, b: &Point) -> Point {
    [&a[0] - &b[0], &a[1] - &b[1], &a[2] - &b[2]]
}

fn det_points(a: &Point, b: &Point, c: &Point) -> BigRational {
    &a[0] * (&b[1] * &c[2] - &b[2] * &c[1]) - &a[1] * (&b[0] * &c[2] - &b[2] * &c[0])
        + &a[2] * (&b[0] * &c[1] - &b[1] * &c[0])
}

fn centroid<'a>(points: impl IntoIterator<Item = &'a Point>) -> Point {
    let mut sum = [
        BigRational::zero(),
        BigRational::zero(),
        BigRational::zero(),
    ];
    let mut n = 0i64;
    for p in points {
        for i in 0..3 {
            sum[i] += &p[i];
        }
        n += 1;
    }
    sum.map(|s| s / rational(n))
}

impl LatticePolytope3 {
    pub fn new(halfspaces: Vec<HalfSpace>) -> Result<Self, PolytopeError> {
        if !Self::is_bounded(&halfspaces) {
            return Err(PolytopeError::Unbounded);
        }
        let vertices = Self::enumerate_vertices(&halfspaces);
        let polytope = Self {
            halfspaces,
            vertices,
        };
        if !polytope.is_full_dimensional() {
            return Err(PolytopeError::Degenerate);
        }
        Ok(polytope)
    }

    /// The recession cone `{d : <n_i, d> >= 0}` is trivial. A nonzero pointed
    /// recession cone has an extreme ray cut out by two independent tight
    /// constraints, so it suffices to test `±(n_i x n_j)`; a cone with a
    /// lineality space shows up as normals of rank < 3.
    fn is_bounded(halfspaces: &[HalfSpace]) -> bool {
        let normals: Vec<Ray> = halfspaces.iter().map(|h| h.normal).collect();
        let full_rank = normals.iter().enumerate().any(|(i, &a)| {
            normals[i + 1..]
                .iter()
                .enumerate()
                .any(|(j, &b)| normals[i + j + 2..].iter().any(|&c| det3(a, b, c) != 0))
        });
        if !full_rank {
            return false;
        }
        for (i, &a) in normals.iter().enumerate() {
            for &b in &normals[i + 1..] {
                let d = cross(a, b);
                if d == [0, 0, 0] {
                    continue;
                }
                for dir in [d, d.map(|x| -x)] {
                    if normals.iter().all(|&n| dot(n, dir) >= 0) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn enumerate_vertices(halfspaces: &[HalfSpace]) -> Vec<Point> {
        let n = halfspaces.len();
        let mut found: Vec<Point> = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let Some(y) = solve3([halfspaces[i], halfspaces[j], halfspaces[k]]) else {
                        continue;
                    };
                    if halfspaces.iter().all(|h| !h.slack(&y).is_negative()) && !found.contains(&y)
                    {
                        found.push(y);
                    }
                }
            }
        }
        found.sort();
        found
    }

    fn is_full_dimensional(&self) -> bool {
        let Some(origin) = self.vertices.first() else {
            return false;
        };
        let diffs: Vec<Point> = self.vertices.iter().map(|v| minus(v, origin)).collect();
        diffs.iter().enumerate().any(|(i, a)| {
            diffs[i + 1..].iter().enumerate().any(|(j, b)| {
                diffs[i + j + 2..]
                    .iter()
                    .any(|c| !det_points(a, b, c).is_zero())
            })
        })
    }

    pub fn halfspaces(&self) -> &[HalfSpace] {
        &self.halfspaces
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// `k * P`. Scaling by zero gives the single point at the origin.
    pub fn dilate(&self, k: u32) -> Self {
        let k = i64::from(k);
        Self {
            halfspaces: self
                .halfspaces
                .iter()
                .map(|h| HalfSpace {
                    normal: h.normal,
                    offset: h.offset * k,
                })
                .collect(),
            vertices: {
                let mut v: Vec<Point> = self
                    .vertices
                    .iter()
                    .map(|p| p.clone().map(|x| x * rational(k)))
                    .collect();
                v.dedup();
                v
            },
        }
    }

    pub fn contains(&self, y: [i64; 3]) -> bool {
        self.halfspaces.iter().all(|h| h.contains_int(y))
    }

    /// Exact Euclidean volume.
    ///
    /// Cones from an interior point over a triangulation of each facet: every
    /// facet is split into triangles joining its vertex centroid to its edges,
    /// where two facet vertices span an edge iff some other half-space is
    /// tight at both.
    pub fn volume(&self) -> BigRational {
        if self.vertices.len() < 4 {
            return BigRational::zero();
        }
        let tight: Vec<BTreeSet<usize>> = self
            .vertices
            .iter()
            .map(|v| {
                self.halfspaces
                    .iter()
                    .enumerate()
                    .filter(|(_, h)| h.slack(v).is_zero())
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        let interior = centroid(&self.vertices);
        let mut seen_facets: Vec<Vec<usize>> = Vec::new();
        let mut total = BigRational::zero();
        for f in 0..self.halfspaces.len() {
            let on_facet: Vec<usize> = (0..self.vertices.len())
                .filter(|&v| tight[v].contains(&f))
                .collect();
            if on_facet.len() < 3 || seen_facets.contains(&on_facet) {
                continue;
            }
            let facet_center = centroid(on_facet.iter().map(|&v| &self.vertices[v]));
            for (i, &a) in on_facet.iter().enumerate() {
                for &b in &on_facet[i + 1..] {
                    let is_edge = tight[a]
                        .intersection(&tight[b])
                        .any(|&g| g != f && !self.same_plane(f, g));
                    if !is_edge {
                        continue;
                    }
                    let d = det_points(
                        &minus(&self.vertices[a], &interior),
                        &minus(&self.vertices[b], &interior),
                        &minus(&facet_center, &interior),
                    );
                    total += d.abs();
                }
            }
            seen_facets.push(on_facet);
        }
        total / rational(6)
    }

    fn same_plane(&self, f: usize, g: usize) -> bool {
        let (a, b) = (self.halfspaces[f], self.halfspaces[g]);
        cross(a.normal, b.normal) == [0, 0, 0]
            && dot(a.normal, b.normal) > 0
            && (0..3).all(|i| a.normal[i] * b.offset == b.normal[i] * a.offset)
    }

    /// Number of integer points in the closed polytope.
    pub fn lattice_points(&self) -> u64 {
        if self.vertices.is_empty() {
            return 0;
        }
        let bound = |i: usize| {
            let lo = self.vertices.iter().map(|v| v[i].ceil()).min().unwrap();
            let hi = self.vertices.iter().map(|v| v[i].floor()).max().unwrap();
            (
                lo.to_integer().try_into().unwrap_or(i64::MIN),
                hi.to_integer().try_into().unwrap_or(i64::MAX),
            )
        };
        let (bx, by, bz) = (bound(0), bound(1), bound(2));
        let mut count = 0;
        for x in bx.0..=bx.1 {
            for y in by.0..=by.1 {
                for z in bz.0..=bz.1 {
                    if self.contains([x, y, z]) {
                        count += 1;
                    }
                }
            }
        }
        count
    }
}

/// Integer points of a bounded polytope.
pub fn lattice_points(p: &LatticePolytope3) -> u64 {
    p.lattice_points()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cube() -> LatticePolytope3 {
        let mut h = Vec::new();
        for i in 0..3 {
            let mut e = [0; 3];
            e[i] = 1;
            h.push(HalfSpace {
                normal: e,
                offset: 0,
            });
            h.push(HalfSpace {
                normal: e.map(|x| -x),
                offset: -1,
            });
        }
        LatticePolytope3::new(h).unwrap()
    }

    fn simplex() -> LatticePolytope3 {
        LatticePolytope3::new(vec![
            HalfSpace {
                normal: [1, 0, 0],
                offset: 0,
            },
            HalfSpace {
                normal: [0, 1, 0],
                offset: 0,
            },
            HalfSpace {
                normal: [0, 0, 1],
                offset: 0,
            },
            HalfSpace {
                normal: [-1, -1, -1],
                offset: -1,
            },
        ])
        .unwrap()
    }

    fn binomial(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn unit_cube() {
        let c = cube();
        assert_eq!(c.vertices().len(), 8);
        assert_eq!(c.lattice_points(), 8);
        assert_eq!(c.volume(), rational(1));
        assert_eq!(c.dilate(3).volume(), rational(27));
    }

    #[test]
    fn dilated_simplex_counts() {
        let s = simplex();
        assert_eq!(s.volume(), BigRational::new(1.into(), 6.into()));
        for d in 0..=8 {
            assert_eq!(s.dilate(d).lattice_points(), binomial(u64::from(d) + 3, 3));
        }
    }

    #[test]
    fn unbounded_rejected() {
        let r = LatticePolytope3::new(vec![
            HalfSpace {
                normal: [1, 0, 0],
                offset: 0,
            },
            HalfSpace {
                normal: [0, 1, 0],
                offset: 0,
            },
            HalfSpace {
                normal: [0, 0, 1],
                offset: 0,
            },
        ]);
        assert_eq!(r, Err(PolytopeError::Unbounded));
        // slab: rank 1 normals
        let r = LatticePolytope3::new(vec![
            HalfSpace {
                normal: [1, 0, 0],
                offset: 0,
            },
            HalfSpace {
                normal: [-1, 0, 0],
                offset: -1,
            },
        ]);
        assert_eq!(r, Err(PolytopeError::Unbounded));
    }

    #[test]
    fn empty_rejected() {
        let r = LatticePolytope3::new(vec![
            HalfSpace {
                normal: [1, 0, 0],
                offset: 1,
            },
            HalfSpace {
                normal: [0, 1, 0],
                offset: 0,
            },
            HalfSpace {
                normal: [0, 0, 1],
                offset: 0,
            },
            HalfSpace {
                normal: [-1, -1, -1],
                offset: 0,
            },
        ]);
        assert_eq!(r, Err(PolytopeError::Degenerate));
    }

    #[test]
    fn redundant_halfspace_does_not_change_volume() {
        let mut h = cube().halfspaces().to_vec();
        h.push(HalfSpace {
            normal: [2, 0, 0],
            offset: 0,
        });
        h.push(HalfSpace {
            normal: [1, 1, 1],
            offset: 0,
        });
        let c = LatticePolytope3::new(h).unwrap();
        assert_eq!(c.volume(), rational(1));
        assert_eq!(c.lattice_points(), 8);
    }
}
