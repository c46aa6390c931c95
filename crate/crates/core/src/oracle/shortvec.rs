//! Fincke–Pohst enumeration of lattice vectors of bounded norm.

use super::gram::GramMatrix;

/// Square completion `Q(x) = Σ_i q_ii (x_i + Σ_{j>i} q_ij x_j)²`.
fn square_completion(g: &GramMatrix) -> Vec<Vec<f64>> {
    let d = g.dim();
    let mut q: Vec<Vec<f64>> = (0..d).map(|i| (0..d).map(|j| g.get(i, j) as f64).collect()).collect();
    for i in 0..d {
        for j in i + 1..d {
            q[j][i] = q[i][j];
            q[i][j] /= q[i][i];
        }
        for k in i + 1..d {
            for l in k..d {
                q[k][l] -= q[k][i] * q[i][l];
            }
        }
    }
    q
}

struct Search<'a> {
    g: &'a GramMatrix,
    q: Vec<Vec<f64>>,
    bound: i64,
    x: Vec<i64>,
    out: Vec<Vec<i64>>,
    limit: usize,
    overflow: bool,
}

impl Search<'_> {
    fn level(&mut self, i: usize, remaining: f64) {
        if self.overflow {
            return;
        }
        let d = self.x.len();
        let center: f64 = -(i + 1..d).map(|j| self.q[i][j] * self.x[j] as f64).sum::<f64>();
        let radius = (remaining.max(0.0) / self.q[i][i]).sqrt() + 1e-9;
        let lo = (center - radius).ceil() as i64;
        let hi = (center + radius).floor() as i64;
        for xi in lo..=hi {
            self.x[i] = xi;
            let t = xi as f64 - center;
            let rest = remaining - self.q[i][i] * t * t;
            if rest < -1e-6 {
                continue;
            }
            if i == 0 {
                if self.x.iter().any(|&c| c != 0) && self.g.inner(&self.x, &self.x) <= self.bound {
                    self.out.push(self.x.clone());
                    if self.out.len() > self.limit {
                        self.overflow = true;
                        return;
                    }
                }
            } else {
                self.level(i - 1, rest);
            }
        }
        self.x[i] = 0;
    }
}

/// All nonzero `x` with `xᵗ G x <= bound`, or `None` when there are more
/// than `limit`.
pub fn short_vectors(g: &GramMatrix, bound: i64, limit: usize) -> Option<Vec<Vec<i64>>> {
    let d = g.dim();
    let mut s = Search {
        g,
        q: square_completion(g),
        bound,
        x: vec![0; d],
        out: Vec::new(),
        limit,
        overflow: false,
    };
    s.level(d - 1, bound as f64 + 1e-6);
    if s.overflow {
        None
    } else {
        s.out.sort();
        Some(s.out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(g: &GramMatrix, bound: i64, box_size: i64) -> Vec<Vec<i64>> {
        let d = g.dim();
        let mut out = Vec::new();
        let width = (2 * box_size + 1) as usize;
        for idx in 0..width.pow(d as u32) {
            let mut k = idx;
            let x: Vec<i64> = (0..d)
                .map(|_| {
                    let c = (k % width) as i64 - box_size;
                    k /= width;
                    c
                })
                .collect();
            if x.iter().any(|&c| c != 0) && g.inner(&x, &x) <= bound {
                out.push(x);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn kissing_numbers() {
        assert_eq!(short_vectors(&GramMatrix::e8(), 2, 1000).unwrap().len(), 240);
        assert_eq!(short_vectors(&GramMatrix::identity(5), 1, 1000).unwrap().len(), 10);
        assert_eq!(short_vectors(&GramMatrix::identity(3), 2, 1000).unwrap().len(), 18);
        assert!(short_vectors(&GramMatrix::e8(), 2, 100).is_none());
    }

    #[test]
    fn matches_box_search() {
        let a2 = GramMatrix::new(vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 3]]).unwrap();
        assert_eq!(short_vectors(&a2, 6, 10_000).unwrap(), brute(&a2, 6, 6));
    }
}
