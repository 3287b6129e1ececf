//! Independent reference implementations used as oracles: cochains evaluated as
//! functions on words, dense boolean Gaussian elimination, and relation spans.

#![allow(dead_code)]

use std::collections::HashMap;

use commlie::algebra::{BimoduleSpec, BracketTable};
use commlie::cochain::Flavor;

/// Row-reduces `rows` (each a dense boolean row) and returns the rank.
pub fn gauss_rank(mut rows: Vec<Vec<bool>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c]) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for r in 0..rows.len() {
            if r != rank && rows[r][c] {
                for (x, &y) in rows[r].iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Words indexing the cochain arguments: non-decreasing (Sym), increasing (Ext) or
/// all words (Tensor), in lexicographic order.
pub fn words(flavor: Flavor, d: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &out {
            for x in 0..d {
                let ok = match (flavor, w.last()) {
                    (_, None) | (Flavor::Tensor, _) => true,
                    (Flavor::Sym, Some(&l)) => x >= l,
                    (Flavor::Ext, Some(&l)) => x > l,
                };
                if ok {
                    let mut v = w.clone();
                    v.push(x);
                    next.push(v);
                }
            }
        }
        out = next;
    }
    out
}

/// A cochain given by its values on basis words, evaluated on arbitrary words by
/// symmetry (Sym), alternation (Ext) or directly (Tensor).
struct Cochain<'a> {
    flavor: Flavor,
    index: &'a HashMap<Vec<usize>, usize>,
    /// Basis cochain: word index `u`, coefficient `a`.
    u: usize,
    a: usize,
}

impl Cochain<'_> {
    /// Coefficient `b` of the value on `word`.
    fn eval(&self, word: &[usize], b: usize) -> bool {
        let mut w = word.to_vec();
        match self.flavor {
            Flavor::Tensor => {}
            Flavor::Sym => w.sort(),
            Flavor::Ext => {
                w.sort();
                if w.windows(2).any(|p| p[0] == p[1]) {
                    return false;
                }
            }
        }
        self.index.get(&w) == Some(&self.u) && b == self.a
    }
}

fn mat_get(m: &commlie::f2la::BitMatrix, i: usize, j: usize) -> bool {
    m.get(i, j)
}

/// Dense matrix of `d^n` built by evaluating the coboundary formula on every basis
/// cochain and every target word, straight from the definitions:
/// `(df)(x_0..x_n) = Σ_i x_i·f(..x̂_i..) + Σ_{i<j} f([x_i,x_j], ..x̂_i..x̂_j..)` for Sym/Ext and
/// the left Loday form (right action on the last argument, bracket in slot `j`) for Tensor.
pub fn naive_differential(flavor: Flavor, t: &BracketTable, m: &BimoduleSpec, n: usize) -> Vec<Vec<bool>> {
    let d = t.dim();
    let md = m.dim();
    let src = words(flavor, d, n);
    let dst = words(flavor, d, n + 1);
    let index: HashMap<Vec<usize>, usize> = src.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let mut rows = vec![vec![false; src.len() * md]; dst.len() * md];
    for u in 0..src.len() {
        for a in 0..md {
            let f = Cochain {
                flavor,
                index: &index,
                u,
                a,
            };
            for (r, w) in dst.iter().enumerate() {
                let mut value = vec![false; md];
                for i in 0..=n {
                    let rest: Vec<usize> = w.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &x)| x).collect();
                    let act = if flavor == Flavor::Tensor && i == n {
                        &m.right()[w[i]]
                    } else {
                        &m.left()[w[i]]
                    };
                    for (b, slot) in value.iter_mut().enumerate() {
                        for c in 0..md {
                            if mat_get(act, b, c) && f.eval(&rest, c) {
                                *slot ^= true;
                            }
                        }
                    }
                }
                for i in 0..=n {
                    for j in i + 1..=n {
                        for k in t.bracket(w[i], w[j]).ones() {
                            let arg: Vec<usize> = match flavor {
                                Flavor::Tensor => w
                                    .iter()
                                    .enumerate()
                                    .filter(|&(p, _)| p != i)
                                    .map(|(p, &x)| if p == j { k } else { x })
                                    .collect(),
                                _ => std::iter::once(k)
                                    .chain(w.iter().enumerate().filter(|&(p, _)| p != i && p != j).map(|(_, &x)| x))
                                    .collect(),
                            };
                            for (b, slot) in value.iter_mut().enumerate() {
                                if f.eval(&arg, b) {
                                    *slot ^= true;
                                }
                            }
                        }
                    }
                }
                for (b, &v) in value.iter().enumerate() {
                    rows[r * md + b][u * md + a] = v;
                }
            }
        }
    }
    rows
}

/// Cohomology dimensions in degrees `0..n_max` from naive differentials.
pub fn naive_betti(flavor: Flavor, t: &BracketTable, m: &BimoduleSpec, n_max: usize) -> Vec<usize> {
    let d = t.dim();
    let dims: Vec<usize> = (0..=n_max).map(|n| words(flavor, d, n).len() * m.dim()).collect();
    let ranks: Vec<usize> = (0..n_max).map(|n| gauss_rank(naive_differential(flavor, t, m, n))).collect();
    (0..n_max)
        .map(|n| dims[n] - ranks[n] - if n > 0 { ranks[n - 1] } else { 0 })
        .collect()
}

/// Dimension of the functionals on `⊗^k F^d` (times `mdim`) annihilating every word
/// relation in `rels`, where a relation is a set of words summed together.
pub fn annihilator_dim(d: usize, k: usize, mdim: usize, rels: &[Vec<Vec<usize>>]) -> usize {
    let all = words(Flavor::Tensor, d, k);
    let index: HashMap<&Vec<usize>, usize> = all.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let rows: Vec<Vec<bool>> = rels
        .iter()
        .map(|r| {
            let mut row = vec![false; all.len()];
            for w in r {
                row[index[w]] ^= true;
            }
            row
        })
        .collect();
    (all.len() - if rows.is_empty() { 0 } else { gauss_rank(rows) }) * mdim
}

/// Relations `x ⊗ x` in slots `(i, j)` expanded over arbitrary vectors: the words
/// with equal letters there and the sums `w + w·(i j)`.
pub fn repeat_relations(d: usize, k: usize, i: usize, j: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for w in words(Flavor::Tensor, d, k) {
        if w[i] == w[j] {
            out.push(vec![w]);
        } else if w[i] < w[j] {
            let mut s = w.clone();
            s.swap(i, j);
            out.push(vec![w, s]);
        }
    }
    out
}

/// Relations `w + w·(i i+1)`.
pub fn swap_relations(d: usize, k: usize, i: usize) -> Vec<Vec<Vec<usize>>> {
    words(Flavor::Tensor, d, k)
        .into_iter()
        .filter(|w| w[i] != w[i + 1])
        .map(|w| {
            let mut s = w.clone();
            s.swap(i, i + 1);
            vec![w, s]
        })
        .collect()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `dim S^n F^d`.
pub fn sym_dim(d: usize, n: usize) -> usize {
    if d == 0 {
        return usize::from(n == 0);
    }
    binomial(d + n - 1, n)
}
