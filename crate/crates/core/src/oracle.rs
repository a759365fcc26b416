//! Explicit representations over a prime field and brute-force Hom spaces.
//!
//! A representation assigns to each arrow `a` a matrix `V_s(a) -> V_t(a)`
//! (rows indexed by the target). Homomorphisms `f: M -> N` satisfy
//! `N_a f_s = f_t M_a` for every arrow.

use thiserror::Error;

use crate::algebra::GentlePresentation;
use crate::artheory::{hooks, is_injective, ArError};
use crate::strings::{BandModuleSpec, StringWord};

pub const DEFAULT_PRIME: u64 = 5;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("representations over different primes ({0} and {1})")]
    PrimeMismatch(u64, u64),
    #[error("representations of different quivers")]
    ShapeMismatch,
    #[error("band parameter vanishes modulo {0}")]
    ZeroParameter(u64),
    #[error("the zero string has no module")]
    ZeroString,
    #[error("relation {0} {1} does not act as zero")]
    RelationViolated(String, String),
    #[error("module is injective; there is no AR sequence starting at it")]
    Injective,
    #[error(transparent)]
    Ar(#[from] ArError),
}

pub type Matrix = Vec<Vec<u64>>;

fn zeros(rows: usize, cols: usize) -> Matrix {
    vec![vec![0; cols]; rows]
}

fn mat_mul(a: &Matrix, b: &Matrix, cols: usize, prime: u64) -> Matrix {
    let mut out = zeros(a.len(), cols);
    for (i, row) in a.iter().enumerate() {
        for (k, &x) in row.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for j in 0..cols {
                out[i][j] = (out[i][j] + x * b[k][j]) % prime;
            }
        }
    }
    out
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Rank over `F_prime` by Gaussian elimination; consumes the rows.
pub fn rank_mod(mut rows: Vec<Vec<u64>>, prime: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][c].is_multiple_of(prime)) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = pow_mod(rows[rank][c], prime - 2, prime);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % prime;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let factor = row[c];
                for (x, &y) in row[c..cols].iter_mut().zip(&pivot_row[c..cols]) {
                    *x = (*x + prime - factor * y % prime) % prime;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixRep {
    pub prime: u64,
    pub dims: Vec<usize>,
    /// One matrix per arrow, `dims[target] x dims[source]`.
    pub maps: Vec<Matrix>,
}

impl MatrixRep {
    fn empty(p: &GentlePresentation, prime: u64, dims: Vec<usize>) -> Self {
        let q = p.quiver();
        let maps = q
            .arrows()
            .iter()
            .map(|a| zeros(dims[a.target], dims[a.source]))
            .collect();
        MatrixRep { prime, dims, maps }
    }

    /// Checks that every relation acts as zero.
    pub fn check_relations(&self, p: &GentlePresentation) -> Result<(), OracleError> {
        let q = p.quiver();
        for &(a, b) in p.relations() {
            let cols = self.dims[q.arrow(a).source];
            let prod = mat_mul(&self.maps[b], &self.maps[a], cols, self.prime);
            if prod.iter().flatten().any(|&x| x != 0) {
                return Err(OracleError::RelationViolated(
                    q.arrow(a).id.clone(),
                    q.arrow(b).id.clone(),
                ));
            }
        }
        Ok(())
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }
}

/// One basis vector per position of the walk; arrows of the walk act as
/// identities between consecutive positions.
pub fn realize_string_module(
    p: &GentlePresentation,
    w: &StringWord,
    prime: u64,
) -> Result<MatrixRep, OracleError> {
    if w.is_zero() {
        return Err(OracleError::ZeroString);
    }
    let q = p.quiver();
    let verts = w.vertices(q);
    let mut dims = vec![0; q.vertex_count()];
    let local: Vec<usize> = verts
        .iter()
        .map(|&v| {
            dims[v] += 1;
            dims[v] - 1
        })
        .collect();
    let mut rep = MatrixRep::empty(p, prime, dims);
    for (i, l) in w.letters().iter().enumerate() {
        let (from, to) = if l.inverse { (i + 1, i) } else { (i, i + 1) };
        rep.maps[l.arrow][local[to]][local[from]] = 1;
    }
    rep.check_relations(p)?;
    Ok(rep)
}

/// `n` basis vectors per band position; the last letter of the canonical
/// rotation carries the Jordan block `J_n(lambda)`.
pub fn realize_band_module(
    p: &GentlePresentation,
    spec: &BandModuleSpec,
    prime: u64,
) -> Result<MatrixRep, OracleError> {
    let lambda = spec.lambda % prime;
    if lambda == 0 {
        return Err(OracleError::ZeroParameter(prime));
    }
    let q = p.quiver();
    let letters = spec.band.letters();
    let m = letters.len();
    let n = spec.n;
    let mut dims = vec![0; q.vertex_count()];
    let local: Vec<usize> = letters
        .iter()
        .map(|l| {
            let v = l.source(q);
            dims[v] += n;
            dims[v] - n
        })
        .collect();
    let mut rep = MatrixRep::empty(p, prime, dims);
    for (i, l) in letters.iter().enumerate() {
        let j = (i + 1) % m;
        let (from, to) = if l.inverse { (j, i) } else { (i, j) };
        let closing = i == m - 1;
        let map = &mut rep.maps[l.arrow];
        for k in 0..n {
            if closing {
                map[local[to] + k][local[from] + k] = lambda;
                if k + 1 < n {
                    map[local[to] + k][local[from] + k + 1] = 1;
                }
            } else {
                map[local[to] + k][local[from] + k] = 1;
            }
        }
    }
    rep.check_relations(p)?;
    Ok(rep)
}

/// `dim Hom(M, N)` as the nullity of the intertwiner equations.
pub fn hom_dim_oracle(
    p: &GentlePresentation,
    m: &MatrixRep,
    n: &MatrixRep,
) -> Result<usize, OracleError> {
    if m.prime != n.prime {
        return Err(OracleError::PrimeMismatch(m.prime, n.prime));
    }
    let q = p.quiver();
    if m.dims.len() != q.vertex_count() || n.dims.len() != q.vertex_count() {
        return Err(OracleError::ShapeMismatch);
    }
    let prime = m.prime;
    // unknown f_v[r][c] for r < n.dims[v], c < m.dims[v]
    let mut offset = Vec::with_capacity(q.vertex_count());
    let mut unknowns = 0;
    for v in 0..q.vertex_count() {
        offset.push(unknowns);
        unknowns += n.dims[v] * m.dims[v];
    }
    let var = |v: usize, r: usize, c: usize| offset[v] + r * m.dims[v] + c;
    let mut rows = Vec::new();
    for (a, arrow) in q.arrows().iter().enumerate() {
        let (s, t) = (arrow.source, arrow.target);
        for r in 0..n.dims[t] {
            for c in 0..m.dims[s] {
                // (N_a f_s)[r][c] - (f_t M_a)[r][c] = 0
                let mut row = vec![0u64; unknowns];
                for k in 0..n.dims[s] {
                    let x = n.maps[a][r][k];
                    if x != 0 {
                        let i = var(s, k, c);
                        row[i] = (row[i] + x) % prime;
                    }
                }
                for k in 0..m.dims[t] {
                    let x = m.maps[a][k][c];
                    if x != 0 {
                        let i = var(t, r, k);
                        row[i] = (row[i] + prime - x) % prime;
                    }
                }
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
    }
    Ok(unknowns - rank_mod(rows, prime))
}

/// Hom dimension between two string modules.
pub fn hom_dim_strings_oracle(
    p: &GentlePresentation,
    v: &StringWord,
    w: &StringWord,
    prime: u64,
) -> Result<usize, OracleError> {
    let m = realize_string_module(p, v, prime)?;
    let n = realize_string_module(p, w, prime)?;
    hom_dim_oracle(p, &m, &n)
}

/// Checks an AR sequence from hooks against explicit modules: dimension
/// vectors add up and `M(w)` maps nontrivially to each middle summand.
pub fn verify_ar_middle(
    p: &GentlePresentation,
    w: &StringWord,
    prime: u64,
) -> Result<bool, OracleError> {
    if w.is_zero() {
        return Err(OracleError::ZeroString);
    }
    if is_injective(p, w) {
        return Err(OracleError::Injective);
    }
    let h = hooks(p, w)?;
    let q = p.quiver();
    let dim = |x: &StringWord| x.dimension_vector(q);
    let mut lhs = dim(w);
    for (a, b) in lhs.iter_mut().zip(dim(&h.w_both)) {
        *a += b;
    }
    let mut rhs = vec![0; q.vertex_count()];
    for mid in [&h.w_left, &h.w_right] {
        for (a, b) in rhs.iter_mut().zip(dim(mid)) {
            *a += b;
        }
    }
    if lhs != rhs {
        return Ok(false);
    }
    let source = realize_string_module(p, w, prime)?;
    for mid in [&h.w_left, &h.w_right] {
        if mid.is_zero() {
            continue;
        }
        let target = realize_string_module(p, mid, prime)?;
        if hom_dim_oracle(p, &source, &target)? == 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Sign;
    use crate::fixtures;
    use crate::strings::{detect_band, parse_string};

    #[test]
    fn rank_basics() {
        assert_eq!(rank_mod(vec![vec![1, 2], vec![2, 4]], 5), 1);
        assert_eq!(rank_mod(vec![vec![1, 2], vec![2, 3]], 5), 2);
        assert_eq!(rank_mod(vec![], 5), 0);
    }

    #[test]
    fn string_module_shapes() {
        let p = fixtures::fix_a();
        let s2 = realize_string_module(&p, &StringWord::trivial(1, Sign::Plus), 5).unwrap();
        assert_eq!(s2.dims, vec![0, 1, 0]);
        assert!(s2.maps.iter().flatten().flatten().all(|&x| x == 0));
        let cd = realize_string_module(&p, &parse_string(&p, "c d").unwrap(), 5).unwrap();
        assert_eq!(cd.dims, vec![0, 1, 2]);
        let w = realize_string_module(&p, &parse_string(&p, "b- c d c- b").unwrap(), 5).unwrap();
        assert_eq!(w.dims, vec![2, 2, 2]);
        assert_eq!(hom_dim_oracle(&p, &w, &w).unwrap(), 2);
    }

    #[test]
    fn kronecker_bands() {
        let p = fixtures::kronecker();
        let band = detect_band(&p).unwrap();
        let m = |n, l| {
            realize_band_module(&p, &BandModuleSpec::new(band.clone(), n, l).unwrap(), 5).unwrap()
        };
        let r1 = m(1, 1);
        assert_eq!(r1.dims, vec![1, 1]);
        assert_eq!(r1.maps, vec![vec![vec![1]], vec![vec![1]]]);
        let r2 = m(1, 2);
        assert_eq!(r2.maps[1], vec![vec![2]]);
        let j = m(2, 1);
        assert_eq!(j.maps[1], vec![vec![1, 1], vec![0, 1]]);
        assert_eq!(hom_dim_oracle(&p, &r1, &r2).unwrap(), 0);
        assert_eq!(hom_dim_oracle(&p, &r1, &r1).unwrap(), 1);
        assert!(matches!(
            realize_band_module(&p, &BandModuleSpec::new(band, 1, 5).unwrap(), 5),
            Err(OracleError::ZeroParameter(5))
        ));
    }

    #[test]
    fn ar_middles() {
        let p = fixtures::loop_algebra();
        let s = StringWord::trivial(0, p.epsilon(0));
        assert!(verify_ar_middle(&p, &s, 5).unwrap());
        let d = parse_string(&p, "d").unwrap();
        assert_eq!(verify_ar_middle(&p, &d, 5), Err(OracleError::Injective));
        let p = fixtures::a2();
        assert!(verify_ar_middle(&p, &StringWord::trivial(1, p.epsilon(0)), 5).unwrap());
    }
}
