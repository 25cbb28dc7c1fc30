//! Shared oracles and generators for the integration tests.
#![allow(dead_code)]

use ltp_hodge::motive::{EPolynomial, HodgeDiamond};
use ltp_hodge::toric::Fan3;
use proptest::prelude::*;

/// Published 4-fold Hodge numbers `(h11, h31, h22)`, rows E8, E7, E6 and
/// columns fans 1 to 4.
pub const TABLE3: [[(i64, i64, i64); 4]; 3] = [
    [
        (2, 3878, 15564),
        (3, 3277, 13164),
        (3, 3397, 13644),
        (3, 3757, 15084),
    ],
    [
        (3, 1573, 6348),
        (4, 1332, 5388),
        (4, 1380, 5580),
        (4, 1524, 6156),
    ],
    [
        (4, 804, 3276),
        (5, 683, 2796),
        (5, 707, 2892),
        (5, 779, 3180),
    ],
];

fn det3(a: [i64; 3], b: [i64; 3], c: [i64; 3]) -> i64 {
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
}

fn cross(a: [i64; 3], b: [i64; 3]) -> [i64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn dot(a: [i64; 3], b: [i64; 3]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Intersection numbers of torus-invariant divisors on a smooth complete
/// toric 3-fold, evaluated from the fan alone.
pub struct ToricIntersections<'a> {
    fan: &'a Fan3,
}

impl<'a> ToricIntersections<'a> {
    pub fn new(fan: &'a Fan3) -> Self {
        Self { fan }
    }

    fn cone_containing(&self, idx: &[usize]) -> Option<[usize; 3]> {
        self.fan
            .cones
            .iter()
            .copied()
            .find(|c| idx.iter().all(|i| c.contains(i)))
    }

    /// Writes `D_i` as a combination of divisors not in `cone` using the
    /// character dual to `v_i` on that cone.
    fn eliminate(&self, i: usize, cone: [usize; 3]) -> Vec<(usize, i64)> {
        let others: Vec<usize> = cone.iter().copied().filter(|&k| k != i).collect();
        let (vi, vj, vl) = (
            self.fan.rays[i],
            self.fan.rays[others[0]],
            self.fan.rays[others[1]],
        );
        let det = det3(vi, vj, vl);
        let m = cross(vj, vl).map(|x| x * det);
        debug_assert_eq!(dot(m, vi), 1);
        (0..self.fan.rays.len())
            .filter(|k| !cone.contains(k))
            .map(|k| (k, -dot(m, self.fan.rays[k])))
            .filter(|&(_, c)| c != 0)
            .collect()
    }

    /// `D_i D_j D_k` for any indices, repeated or not.
    pub fn triple(&self, i: usize, j: usize, k: usize) -> i64 {
        let mut idx = [i, j, k];
        idx.sort_unstable();
        let [a, b, c] = idx;
        if a != b && b != c {
            return i64::from(self.cone_containing(&idx).is_some());
        }
        // pick the repeated index and trade one copy for distant divisors
        let (rep, rest) = if a == b { (a, c) } else { (b, a) };
        let Some(cone) = self.cone_containing(&[rep, rest]) else {
            return 0;
        };
        self.eliminate(rep, cone)
            .into_iter()
            .map(|(k, coef)| coef * self.triple(k, rep, rest))
            .sum()
    }

    /// `(-K)^3 = (sum D_i)^3`.
    pub fn anticanonical_cube(&self) -> i64 {
        let n = self.fan.rays.len();
        let mut total = 0;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    total += self.triple(i, j, k);
                }
            }
        }
        total
    }
}

pub fn epoly_strategy(max_deg: u32, max_coef: i64) -> impl Strategy<Value = EPolynomial> {
    prop::collection::vec((0..=max_deg, 0..=max_deg, -max_coef..=max_coef), 0..6)
        .prop_map(EPolynomial::from_terms)
}

/// Random Hodge diamonds with both Hodge and Serre symmetry.
#[allow(clippy::needless_range_loop)]
pub fn diamond_strategy(max_dim: usize) -> impl Strategy<Value = HodgeDiamond> {
    (0..=max_dim).prop_flat_map(|n| {
        prop::collection::vec(0u64..40, (n + 1) * (n + 1)).prop_map(move |raw| {
            let mut rows = vec![vec![0u64; n + 1]; n + 1];
            for p in 0..=n {
                for q in 0..=n {
                    // canonical representative of the orbit under the two symmetries
                    let orbit = [(p, q), (q, p), (n - p, n - q), (n - q, n - p)];
                    let (rp, rq) = *orbit.iter().min().unwrap();
                    rows[p][q] = raw[rp * (n + 1) + rq];
                }
            }
            rows[0][0] = 1;
            rows[n][n] = 1;
            HodgeDiamond::new(n, rows).expect("symmetric by construction")
        })
    })
}
