//! Seeded random instances: commutative Lie algebras, left Leibniz algebras, valid
//! coefficient modules and basis changes.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{check_module_axioms, consistent_lambdas, BracketTable, ModuleSpec};
use crate::f2la::{BitMatrix, BitVec, Subspace};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_vec<R: Rng>(rng: &mut R, n: usize) -> BitVec {
    BitVec::from_bools(&(0..n).map(|_| rng.gen()).collect::<Vec<_>>())
}

pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> BitMatrix {
    let mut m = BitMatrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m.set(i, j, rng.gen());
        }
    }
    m
}

pub fn random_invertible<R: Rng>(rng: &mut R, n: usize) -> BitMatrix {
    loop {
        let m = random_matrix(rng, n, n);
        if m.rank() == n {
            return m;
        }
    }
}

/// Random symmetric table satisfying Jacobi, by rejection.
pub fn random_commutative_lie<R: Rng>(rng: &mut R, d: usize) -> BracketTable {
    loop {
        let mut t = BracketTable::abelian(d);
        for i in 0..d {
            for j in i..d {
                let v = random_vec(rng, d);
                t.set_bracket(i, j, v.clone());
                t.set_bracket(j, i, v);
            }
        }
        if t.classify().jacobi {
            return t;
        }
    }
}

/// Random Lie algebra (alternating, Jacobi), by rejection.
pub fn random_lie<R: Rng>(rng: &mut R, d: usize) -> BracketTable {
    loop {
        let mut t = BracketTable::abelian(d);
        for i in 0..d {
            for j in i + 1..d {
                let v = random_vec(rng, d);
                t.set_bracket(i, j, v.clone());
                t.set_bracket(j, i, v);
            }
        }
        if t.classify().jacobi {
            return t;
        }
    }
}

/// Random left Leibniz algebra with an arbitrary (not necessarily symmetric) table.
pub fn random_left_leibniz<R: Rng>(rng: &mut R, d: usize) -> BracketTable {
    loop {
        let mut t = BracketTable::abelian(d);
        for i in 0..d {
            for j in 0..d {
                t.set_bracket(i, j, random_vec(rng, d));
            }
        }
        if t.classify().left_leibniz {
            return t;
        }
    }
}

fn direct_sum(a: &ModuleSpec, b: &ModuleSpec) -> ModuleSpec {
    let (m, n) = (a.dim(), b.dim());
    let acts = a
        .actions()
        .iter()
        .zip(b.actions())
        .map(|(x, y)| {
            let mut s = BitMatrix::zeros(m + n, m + n);
            for i in 0..m {
                for j in 0..m {
                    s.set(i, j, x.get(i, j));
                }
            }
            for i in 0..n {
                for j in 0..n {
                    s.set(m + i, m + j, y.get(i, j));
                }
            }
            s
        })
        .collect();
    ModuleSpec::new(m + n, acts)
}

fn conjugate(m: &ModuleSpec, p: &BitMatrix) -> ModuleSpec {
    let inv = p.inverse().expect("invertible");
    ModuleSpec::new(m.dim(), m.actions().iter().map(|a| inv.mul(a).mul(p)).collect())
}

/// Random module of dimension at most `max_dim`: a direct sum of trivial and
/// one-dimensional weight modules in a random basis, or the adjoint module when it fits.
pub fn random_module<R: Rng>(rng: &mut R, t: &BracketTable, max_dim: usize) -> ModuleSpec {
    let d = t.dim();
    let lambdas = consistent_lambdas(t);
    let one = |rng: &mut R| {
        let l = lambdas.choose(rng).expect("zero weight is always consistent");
        ModuleSpec::new(
            1,
            (0..d)
                .map(|i| {
                    let mut m = BitMatrix::zeros(1, 1);
                    m.set(0, 0, l.get(i));
                    m
                })
                .collect(),
        )
    };
    if d <= max_dim && rng.gen_bool(0.2) {
        let adj = ModuleSpec::new(d, (0..d).map(|i| t.ad(&BitVec::unit(d, i))).collect());
        if check_module_axioms(t, &adj).is_ok_and(|c| c.passed) {
            return adj;
        }
    }
    let dim = rng.gen_range(1..=max_dim.max(1));
    let mut m = one(rng);
    for _ in 1..dim {
        let next = one(rng);
        m = direct_sum(&m, &next);
    }
    let p = random_invertible(rng, m.dim());
    conjugate(&m, &p)
}

/// Random subspace spanned by `k` random vectors.
pub fn random_subspace<R: Rng>(rng: &mut R, d: usize, k: usize) -> Subspace {
    let vecs: Vec<BitVec> = (0..k).map(|_| random_vec(rng, d)).collect();
    Subspace::span(d, &vecs)
}
