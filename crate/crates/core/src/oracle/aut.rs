//! Automorphism groups of definite lattices by backtracking over images of
//! the basis vectors.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use super::gram::{determinant, GramMatrix};
use super::shortvec::short_vectors;
use crate::error::{Error, Result};

pub const MAX_DIM: usize = 9;
pub const MAX_SHORT_VECTORS: usize = 250;

/// Order of the orthogonal group of a lattice and of its determinant-one
/// subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutCount {
    pub total: BigInt,
    pub so_part: BigInt,
}

/// An integral matrix whose column `j` is the image of the `j`-th basis
/// vector.
pub type IntMatrix = Vec<Vec<i64>>;

struct Candidates {
    vectors: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    /// `inner[a][b] = v_aᵗ G v_b`.
    inner: Vec<Vec<i64>>,
    /// Vectors of norm `G_ii`, per basis index.
    by_basis: Vec<Vec<usize>>,
    basis: Vec<usize>,
    gram: GramMatrix,
}

impl Candidates {
    fn new(g: &GramMatrix) -> Result<Self> {
        let d = g.dim();
        if d > MAX_DIM {
            return Err(Error::SearchBound(format!("dimension {d} > {MAX_DIM}")));
        }
        let vectors = short_vectors(g, g.max_diagonal(), MAX_SHORT_VECTORS).ok_or_else(|| {
            Error::SearchBound(format!("more than {MAX_SHORT_VECTORS} vectors of norm <= {}", g.max_diagonal()))
        })?;
        let index: HashMap<Vec<i64>, usize> = vectors.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        let inner: Vec<Vec<i64>> = vectors.iter().map(|a| vectors.iter().map(|b| g.inner(a, b)).collect()).collect();
        let by_basis = (0..d)
            .map(|i| (0..vectors.len()).filter(|&a| inner[a][a] == g.get(i, i)).collect())
            .collect();
        let basis = (0..d)
            .map(|i| {
                let e: Vec<i64> = (0..d).map(|j| i64::from(i == j)).collect();
                index[&e]
            })
            .collect();
        Ok(Candidates { vectors, index, inner, by_basis, basis, gram: g.clone() })
    }

    fn dim(&self) -> usize {
        self.gram.dim()
    }

    fn fits(&self, images: &[usize], v: usize) -> bool {
        let k = images.len();
        images.iter().enumerate().all(|(j, &w)| self.inner[v][w] == self.gram.get(k, j))
    }

    /// First completion of `images` to a full automorphism.
    fn find(&self, images: &mut Vec<usize>) -> bool {
        let k = images.len();
        if k == self.dim() {
            return true;
        }
        for &v in &self.by_basis[k] {
            if self.fits(images, v) {
                images.push(v);
                if self.find(images) {
                    return true;
                }
                images.pop();
            }
        }
        false
    }

    /// Every completion of `images`, stopping after `limit` leaves.
    fn enumerate(&self, images: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, limit: usize) -> bool {
        let k = images.len();
        if k == self.dim() {
            out.push(images.clone());
            return out.len() <= limit;
        }
        for &v in &self.by_basis[k] {
            if self.fits(images, v) {
                images.push(v);
                let more = self.enumerate(images, out, limit);
                images.pop();
                if !more {
                    return false;
                }
            }
        }
        true
    }

    fn matrix(&self, images: &[usize]) -> IntMatrix {
        let d = self.dim();
        (0..d).map(|r| images.iter().map(|&c| self.vectors[c][r]).collect()).collect()
    }

    /// The permutation of the candidate vectors induced by an automorphism.
    fn permutation(&self, images: &[usize]) -> Vec<usize> {
        let d = self.dim();
        self.vectors
            .iter()
            .map(|v| {
                let mut w = vec![0i64; d];
                for (j, &c) in v.iter().enumerate() {
                    if c != 0 {
                        for (r, x) in w.iter_mut().enumerate() {
                            *x += c * self.vectors[images[j]][r];
                        }
                    }
                }
                self.index[&w]
            })
            .collect()
    }
}

fn matrix_det(m: &IntMatrix) -> BigInt {
    let d = m.len();
    let flat: Vec<i64> = m.iter().flatten().copied().collect();
    determinant(d, &flat)
}

/// Closes `set` (membership flags) under `gens`, starting from `seeds`.
fn close(set: &mut [bool], seeds: Vec<usize>, gens: &[Vec<usize>]) {
    let mut queue = seeds;
    while let Some(p) = queue.pop() {
        for g in gens {
            let q = g[p];
            if !set[q] {
                set[q] = true;
                queue.push(q);
            }
        }
    }
}

/// `|O(L)|` and `|SO(L)|` by a stabilizer chain along the basis: the
/// order is the product over `i` of the orbit sizes of `e_i` under the
/// pointwise stabilizer of `e_0, …, e_{i−1}`. Orbits are grown by closing
/// under the automorphisms found so far; only points not reached that way
/// cost a backtracking search.
pub fn count_automorphisms(g: &GramMatrix) -> Result<AutCount> {
    let c = Candidates::new(g)?;
    let d = c.dim();
    let n = c.vectors.len();
    let mut gens: Vec<Vec<usize>> = Vec::new();
    let mut has_reflection = false;
    let mut total = BigInt::one();
    for level in (0..d).rev() {
        let prefix: Vec<usize> = c.basis[..level].to_vec();
        let mut in_orbit = vec![false; n];
        let mut outside = vec![false; n];
        in_orbit[c.basis[level]] = true;
        close(&mut in_orbit, vec![c.basis[level]], &gens);
        for &v in &c.by_basis[level] {
            if in_orbit[v] || outside[v] || !c.fits(&prefix, v) {
                continue;
            }
            let mut images = prefix.clone();
            images.push(v);
            if c.find(&mut images) {
                if matrix_det(&c.matrix(&images)) != BigInt::one() {
                    has_reflection = true;
                }
                gens.push(c.permutation(&images));
                let seeds: Vec<usize> = (0..n).filter(|&p| in_orbit[p]).collect();
                in_orbit[v] = true;
                let mut seeds = seeds;
                seeds.push(v);
                close(&mut in_orbit, seeds, &gens);
            } else {
                outside[v] = true;
                close(&mut outside, vec![v], &gens);
            }
        }
        let orbit = c.by_basis[level].iter().filter(|&&v| in_orbit[v]).count();
        total *= BigInt::from(orbit);
    }
    let so_part = if has_reflection { &total / 2u32 } else { total.clone() };
    Ok(AutCount { total, so_part })
}

/// `|O(L)|` by visiting every automorphism; `None` past `max_leaves`.
pub fn count_by_backtracking(g: &GramMatrix, max_leaves: usize) -> Result<Option<AutCount>> {
    let Some(all) = enumerate_automorphisms(g, max_leaves)? else {
        return Ok(None);
    };
    let total = BigInt::from(all.len());
    let so = all.iter().filter(|m| matrix_det(m).is_one()).count();
    Ok(Some(AutCount { total, so_part: BigInt::from(so) }))
}

/// All automorphisms as integral matrices; `None` past `limit`.
pub fn enumerate_automorphisms(g: &GramMatrix, limit: usize) -> Result<Option<Vec<IntMatrix>>> {
    let c = Candidates::new(g)?;
    let mut out = Vec::new();
    if !c.enumerate(&mut Vec::new(), &mut out, limit) {
        return Ok(None);
    }
    Ok(Some(out.iter().map(|imgs| c.matrix(imgs)).collect()))
}

/// True when `Tᵗ G T = G`.
pub fn is_automorphism(g: &GramMatrix, t: &IntMatrix) -> bool {
    let d = g.dim();
    let col = |j: usize| -> Vec<i64> { (0..d).map(|r| t[r][j]).collect() };
    (0..d).all(|i| (0..d).all(|j| g.inner(&col(i), &col(j)) == g.get(i, j)))
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let d = a.len();
    (0..d)
        .map(|i| (0..d).map(|j| (0..d).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

/// Whether `m` has determinant ±1.
pub fn is_unimodular_matrix(m: &IntMatrix) -> bool {
    let det = matrix_det(m);
    det.is_one() || det == -BigInt::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fact(n: u64) -> BigInt {
        (1..=n).fold(BigInt::one(), |a, k| a * k)
    }

    #[test]
    fn signed_permutations() {
        for d in 3..=8usize {
            let c = count_automorphisms(&GramMatrix::identity(d)).unwrap();
            let expected = (BigInt::one() << d) * fact(d as u64);
            assert_eq!(c.total, expected, "d={d}");
            assert_eq!(c.so_part, &expected / 2u32);
        }
    }

    #[test]
    fn backtracking_agrees_on_small_groups() {
        for g in [GramMatrix::identity(3), GramMatrix::identity(4)] {
            assert_eq!(count_by_backtracking(&g, 1 << 20).unwrap().unwrap(), count_automorphisms(&g).unwrap());
        }
        let a2 = GramMatrix::new(vec![vec![2, -1, 0], vec![-1, 2, 0], vec![0, 0, 1]]).unwrap();
        let c = count_by_backtracking(&a2, 1 << 20).unwrap().unwrap();
        // |W(A2)| · |±1| · |O(Z)| = 12 · 2
        assert_eq!(c.total, BigInt::from(24));
        assert_eq!(c, count_automorphisms(&a2).unwrap());
        assert!(count_by_backtracking(&GramMatrix::identity(5), 10).unwrap().is_none());
    }

    #[test]
    fn search_bounds() {
        assert!(matches!(count_automorphisms(&GramMatrix::identity(10)), Err(Error::SearchBound(_))));
        let big = GramMatrix::new(vec![vec![4, 0, 0], vec![0, 4, 0], vec![0, 0, 400]]).unwrap();
        assert!(matches!(count_automorphisms(&big), Err(Error::SearchBound(_))));
    }

    #[test]
    fn enumerated_elements_are_isometries() {
        let g = GramMatrix::identity(3);
        let all = enumerate_automorphisms(&g, 1000).unwrap().unwrap();
        assert_eq!(all.len(), 48);
        assert!(all.iter().all(|t| is_automorphism(&g, t) && is_unimodular_matrix(t)));
    }
}
