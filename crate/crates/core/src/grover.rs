//! The Grover transfer matrix, the isotropic transition matrix and the exact
//! characteristic polynomial of the walk.
//!
//! Arc amplitudes on `f` move to every arc `e` leaving `t(f)`: transmission
//! weight `2/deg(t(f))`, reflection (onto `f^-1`) weight `2/deg(t(f)) - 1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::graph::Graph;
use crate::linalg::{
    charpoly_interpolated, det_interpolated_at, symmetric_points, ExactMatrix, ExactScalar,
    IntPolynomial, LinalgError, PolyMatrix, RatPolynomial,
};

/// Default arc cap for the direct `det(xI - U)` check.
pub const DEFAULT_FACTORIZATION_CAP: usize = 40;

/// Path-sum enumeration refuses estimates above this many walks.
pub const WALK_SUM_LIMIT: f64 = 1e7;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GroverError {
    #[error("(x^2 - 1)^{power} does not divide the integer-cleared determinant")]
    ExactDivisionFailure { power: usize },
    #[error("walk enumeration would visit about {estimate:.3e} walks")]
    ExplosionGuard { estimate: f64 },
    #[error("graph has {arcs} arcs, above the cap of {cap}")]
    TooLarge { arcs: usize, cap: usize },
    #[error("arc index {0} out of range")]
    ArcIndex(usize),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Characteristic polynomial of `U`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    /// `prod(deg) * det(xI - U)`, an integer polynomial of degree `2m`.
    pub scaled: IntPolynomial,
    /// `prod(deg)`, the leading coefficient of `scaled`.
    pub leading: BigInt,
    /// `det(xI - U)` itself.
    pub monic: RatPolynomial,
}

#[derive(Debug, Clone)]
pub struct GroverOperator {
    graph: Graph,
    u: ExactMatrix,
    t: ExactMatrix,
    adjacency: ExactMatrix,
    degree: ExactMatrix,
}

fn ratio(n: i64, d: usize) -> ExactScalar {
    ExactScalar::new(n.into(), BigInt::from(d))
}

impl GroverOperator {
    pub fn new(graph: Graph) -> Self {
        let n = graph.vertex_count();
        let arcs = graph.arc_count();
        let mut u = ExactMatrix::zeros(arcs, arcs);
        for f in 0..arcs {
            let head = graph.arc(f).terminus;
            let d = graph.degree(head);
            let transmit = ratio(2, d);
            let reflect = ratio(2 - d as i64, d);
            for e in graph.arcs_from(head) {
                let w = if e == graph.inverse(f) {
                    reflect.clone()
                } else {
                    transmit.clone()
                };
                u.set(e, f, w);
            }
        }
        let adjacency = ExactMatrix::from_fn(n, n, |i, j| {
            if graph.has_edge(i, j) {
                ExactScalar::one()
            } else {
                ExactScalar::zero()
            }
        });
        let degree = ExactMatrix::from_fn(n, n, |i, j| {
            if i == j {
                ratio(graph.degree(i) as i64, 1)
            } else {
                ExactScalar::zero()
            }
        });
        let t = ExactMatrix::from_fn(n, n, |i, j| {
            if graph.has_edge(i, j) {
                ratio(1, graph.degree(i))
            } else {
                ExactScalar::zero()
            }
        });
        GroverOperator {
            graph,
            u,
            t,
            adjacency,
            degree,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// The `2m x 2m` Grover transfer matrix, rows and columns in arc order.
    pub fn u(&self) -> &ExactMatrix {
        &self.u
    }

    /// Transition matrix `D^-1 A`.
    pub fn t(&self) -> &ExactMatrix {
        &self.t
    }

    pub fn adjacency(&self) -> &ExactMatrix {
        &self.adjacency
    }

    pub fn degree_matrix(&self) -> &ExactMatrix {
        &self.degree
    }

    /// Nonzero entries `(e, U[e][f])` of column `f`.
    pub fn column(&self, f: usize) -> impl Iterator<Item = (usize, &ExactScalar)> + '_ {
        let head = self.graph.arc(f).terminus;
        self.graph
            .arcs_from(head)
            .map(move |e| (e, self.u.get(e, f)))
            .filter(|(_, w)| !w.is_zero())
    }

    /// `prod(deg(v))`.
    pub fn degree_product(&self) -> BigInt {
        self.graph
            .degrees()
            .iter()
            .map(|&d| BigInt::from(d))
            .product()
    }

    /// `det(xD - A)`, which is `prod(deg) * det(xI - T)`.
    pub fn transition_charpoly(&self) -> Result<IntPolynomial, GroverError> {
        let g = &self.graph;
        let m = PolyMatrix::from_fn(g.vertex_count(), |i, j| {
            if i == j {
                IntPolynomial::from_i64s(&[0, g.degree(i) as i64])
            } else if g.has_edge(i, j) {
                IntPolynomial::from_i64s(&[-1])
            } else {
                IntPolynomial::zero()
            }
        });
        Ok(charpoly_interpolated(&m)?)
    }

    /// `det((x^2 + 1) D - 2x A)`.
    pub fn cleared_determinant(&self) -> Result<IntPolynomial, GroverError> {
        let g = &self.graph;
        let m = PolyMatrix::from_fn(g.vertex_count(), |i, j| {
            if i == j {
                let d = g.degree(i) as i64;
                IntPolynomial::from_i64s(&[d, 0, d])
            } else if g.has_edge(i, j) {
                IntPolynomial::from_i64s(&[0, -2])
            } else {
                IntPolynomial::zero()
            }
        });
        Ok(charpoly_interpolated(&m)?)
    }

    /// Characteristic polynomial of `U` through the vertex-level factorization
    /// `det(xI - U) = (x^2 - 1)^(m - n) det((x^2 + 1) I - 2x T)`.
    ///
    /// Trees (`m - n = -1`) divide the vertex determinant by `x^2 - 1` exactly.
    pub fn charpoly(&self) -> Result<CharPoly, GroverError> {
        let (n, m) = (self.graph.vertex_count(), self.graph.edge_count());
        let q = self.cleared_determinant()?;
        let x2m1 = IntPolynomial::from_i64s(&[-1, 0, 1]);
        let scaled = if m >= n {
            &x2m1.pow((m - n) as u32) * &q
        } else {
            let power = n - m;
            let (quot, exact) = q.divide_exact(&x2m1.pow(power as u32));
            if !exact {
                return Err(GroverError::ExactDivisionFailure { power });
            }
            quot
        };
        let leading = self.degree_product();
        debug_assert_eq!(scaled.degree(), Some(2 * m));
        debug_assert_eq!(scaled.leading(), Some(&leading));
        let monic = scaled.to_rational().to_monic();
        Ok(CharPoly {
            scaled,
            leading,
            monic,
        })
    }

    /// `det(xI - U)` computed directly from the arc-level matrix.
    ///
    /// With `L` the lcm of the degrees, `L U` is integral and
    /// `det(xI - U) = det(xL I - L U) / L^(2m)`.
    pub fn direct_charpoly(&self, cap: usize) -> Result<RatPolynomial, GroverError> {
        let arcs = self.graph.arc_count();
        if arcs > cap {
            return Err(GroverError::TooLarge { arcs, cap });
        }
        let (scale, ints) = self.u.clear_denominators();
        let m = PolyMatrix::from_fn(arcs, |i, j| {
            let constant = -ints[i * arcs + j].clone();
            if i == j {
                IntPolynomial::new(vec![constant, scale.clone()])
            } else {
                IntPolynomial::new(vec![constant])
            }
        });
        let det = det_interpolated_at(&m, &symmetric_points(arcs + 1))?;
        let denom = BigRational::from_integer(num_traits::pow(scale, arcs));
        Ok(det.to_rational().map(|c| c / &denom))
    }

    /// Whether the direct characteristic polynomial equals the factorized one.
    pub fn verify_factorization(&self, cap: usize) -> Result<bool, GroverError> {
        Ok(self.direct_charpoly(cap)? == self.charpoly()?.monic)
    }

    /// `(U^k)[e][f]` as a sum over arc walks `f -> h1 -> ... -> h(k-1) -> e`
    /// of the products of one-step weights.
    pub fn walk_sum_entry(&self, e: usize, f: usize, k: usize) -> Result<ExactScalar, GroverError> {
        let arcs = self.graph.arc_count();
        for index in [e, f] {
            if index >= arcs {
                return Err(GroverError::ArcIndex(index));
            }
        }
        if k == 0 {
            return Ok(if e == f {
                ExactScalar::one()
            } else {
                ExactScalar::zero()
            });
        }
        let estimate = (self.graph.max_degree() as f64).powi(k as i32 - 1);
        if estimate > WALK_SUM_LIMIT {
            return Err(GroverError::ExplosionGuard { estimate });
        }
        let distance = self.steps_to(e);
        let mut total = ExactScalar::zero();
        self.extend_walks(f, e, k, &ExactScalar::one(), &distance, &mut total);
        Ok(total)
    }

    /// Fewest steps from each arc to `target` along nonzero transitions.
    fn steps_to(&self, target: usize) -> Vec<usize> {
        let arcs = self.graph.arc_count();
        let mut dist = vec![usize::MAX; arcs];
        dist[target] = 0;
        let mut queue = std::collections::VecDeque::from([target]);
        // Predecessors of `e` are the arcs entering o(e).
        while let Some(e) = queue.pop_front() {
            let tail = self.graph.arc(e).origin;
            for out in self.graph.arcs_from(tail) {
                let pred = self.graph.inverse(out);
                if dist[pred] == usize::MAX && !self.u.get(e, pred).is_zero() {
                    dist[pred] = dist[e] + 1;
                    queue.push_back(pred);
                }
            }
        }
        dist
    }

    fn extend_walks(
        &self,
        current: usize,
        target: usize,
        remaining: usize,
        weight: &ExactScalar,
        distance: &[usize],
        total: &mut ExactScalar,
    ) {
        if remaining == 0 {
            if current == target {
                *total += weight;
            }
            return;
        }
        for (next, w) in self.column(current) {
            if distance[next] < remaining {
                self.extend_walks(next, target, remaining - 1, &(weight * w), distance, total);
            }
        }
    }

    /// Least common multiple of the vertex degrees.
    pub fn degree_lcm(&self) -> u64 {
        self.graph
            .degrees()
            .iter()
            .fold(1u64, |l, &d| l.lcm(&(d as u64)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{from_edge_list, Family};
    use crate::linalg::cyclotomic;

    fn q(n: i64, d: i64) -> ExactScalar {
        ExactScalar::new(n.into(), d.into())
    }

    fn op(family: Family) -> GroverOperator {
        GroverOperator::new(family.build().unwrap())
    }

    fn poly_product(factors: &[(u64, u32)]) -> RatPolynomial {
        factors
            .iter()
            .fold(IntPolynomial::one(), |acc, &(d, k)| {
                &acc * &cyclotomic(d).pow(k)
            })
            .to_rational()
    }

    #[test]
    fn p2_is_the_swap() {
        let u = op(Family::Path(2)).u().clone();
        assert_eq!(
            u,
            ExactMatrix::from_i64_rows(&[vec![0, 1], vec![1, 0]]).unwrap()
        );
    }

    #[test]
    fn k13_entries() {
        let g = op(Family::CompleteBipartite(1, 3));
        let u = g.u();
        // Arcs: (0,1) (0,2) (0,3) (1,0) (2,0) (3,0).
        assert_eq!(u.get(0, 3), &q(-1, 3));
        assert_eq!(u.get(0, 4), &q(2, 3));
        assert_eq!(u.get(3, 0), &q(1, 1));
        assert_eq!(u.get(3, 1), &q(0, 1));
    }

    #[test]
    fn c3_columns() {
        let g = op(Family::Cycle(3));
        for f in 0..6 {
            let col: Vec<_> = g.graph().arcs_from(g.graph().arc(f).terminus).collect();
            assert_eq!(col.len(), 2);
            for e in col {
                let expected = if e == g.graph().inverse(f) {
                    q(0, 1)
                } else {
                    q(1, 1)
                };
                assert_eq!(g.u().get(e, f), &expected);
            }
        }
    }

    #[test]
    fn transition_rows_sum_to_one() {
        let g = op(Family::CompleteBipartite(2, 3));
        for i in 0..5 {
            let sum: ExactScalar = g.t().row(i).iter().sum();
            assert_eq!(sum, q(1, 1));
        }
    }

    #[test]
    fn orthogonality() {
        for family in [
            Family::Complete(5),
            Family::Path(4),
            Family::CompleteBipartite(2, 3),
        ] {
            let u = op(family).u().clone();
            assert!(u.transpose().matmul(&u).unwrap().is_identity());
        }
    }

    #[test]
    fn charpoly_examples() {
        let p2 = op(Family::Path(2)).charpoly().unwrap();
        assert_eq!(
            p2.monic,
            IntPolynomial::from_i64s(&[-1, 0, 1]).to_rational()
        );

        let c3 = op(Family::Cycle(3)).charpoly().unwrap();
        assert_eq!(c3.leading, BigInt::from(8));
        assert_eq!(c3.monic, poly_product(&[(1, 2), (3, 2)]));

        let k13 = op(Family::CompleteBipartite(1, 3)).charpoly().unwrap();
        assert_eq!(k13.monic, poly_product(&[(1, 1), (2, 1), (4, 2)]));
        assert_eq!(k13.scaled.degree(), Some(6));
    }

    #[test]
    fn factorization_matches_direct() {
        for family in [
            Family::Path(2),
            Family::CompleteBipartite(1, 3),
            Family::Cycle(4),
            Family::Complete(4),
        ] {
            assert!(
                op(family)
                    .verify_factorization(DEFAULT_FACTORIZATION_CAP)
                    .unwrap(),
                "{family:?}"
            );
        }
        let big = op(Family::Complete(7));
        assert!(matches!(
            big.verify_factorization(40),
            Err(GroverError::TooLarge { arcs: 42, cap: 40 })
        ));
    }

    #[test]
    fn walk_sums() {
        let p2 = op(Family::Path(2));
        assert_eq!(p2.walk_sum_entry(0, 0, 2).unwrap(), q(1, 1));
        assert_eq!(p2.walk_sum_entry(0, 0, 1).unwrap(), q(0, 1));

        let c3 = op(Family::Cycle(3));
        let e = c3
            .graph()
            .arc_index(crate::graph::Arc {
                origin: 0,
                terminus: 1,
            })
            .unwrap();
        assert_eq!(c3.walk_sum_entry(e, e, 3).unwrap(), q(1, 1));
    }

    #[test]
    fn pendant_triangle_closed_form() {
        // v = 3 is the pendant, v1 = 0 has degree 3, v2 and v3 have degree 2.
        let g = GroverOperator::new(from_edge_list("0 1\n1 2\n2 0\n0 3").unwrap());
        let e = g
            .graph()
            .arc_index(crate::graph::Arc {
                origin: 3,
                terminus: 0,
            })
            .unwrap();
        let closed_form = (q(2, 1) / q(1, 1) - q(1, 1)) * q(8, 9) * q(2, 2) * q(2, 2);
        assert_eq!(g.walk_sum_entry(e, e, 5).unwrap(), closed_form);
        assert_eq!(closed_form, q(8, 9));
    }

    #[test]
    fn walk_sum_guard() {
        let g = op(Family::Complete(8));
        assert!(matches!(
            g.walk_sum_entry(0, 0, 10),
            Err(GroverError::ExplosionGuard { .. })
        ));
        assert!(matches!(
            g.walk_sum_entry(999, 0, 2),
            Err(GroverError::ArcIndex(999))
        ));
    }
}
