//! Column index sets and the two rectangular block Hankel matrices.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, CMat};
use crate::markov::MarkovSequence;
use crate::matpoly::Parity;
use crate::split::SplitResult;

/// Column index sets of the dominant part (0-based internally).
///
/// `i_sets[i + 1]` holds `I_i = {k : i < cdeg_fd[k]}` for `i = −1..m`, split by
/// the parity of the column degree of `F` into `e_sets` and `o_sets`.
/// `tilde_sets[i] = I_iᵉ ∪ I_{i−1}ᵒ` for `i = 0..m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexSets {
    pub i_sets: Vec<Vec<usize>>,
    pub e_sets: Vec<Vec<usize>>,
    pub o_sets: Vec<Vec<usize>>,
    pub tilde_sets: Vec<Vec<usize>>,
}

impl IndexSets {
    /// `I_i` for `i ≥ −1`.
    pub fn i_set(&self, i: isize) -> &[usize] {
        &self.i_sets[(i + 1) as usize]
    }

    /// `Ĩ_i` for `i ≥ 0`.
    pub fn tilde_set(&self, i: usize) -> &[usize] {
        &self.tilde_sets[i]
    }

    /// Copy with 1-based column labels.
    pub fn one_based(&self) -> IndexSets {
        let shift = |sets: &Vec<Vec<usize>>| -> Vec<Vec<usize>> {
            sets.iter()
                .map(|s| s.iter().map(|k| k + 1).collect())
                .collect()
        };
        IndexSets {
            i_sets: shift(&self.i_sets),
            e_sets: shift(&self.e_sets),
            o_sets: shift(&self.o_sets),
            tilde_sets: shift(&self.tilde_sets),
        }
    }
}

pub fn index_sets(sr: &SplitResult) -> IndexSets {
    let p = sr.size();
    let m = sr.m as isize;
    let select = |i: isize, parity: Option<Parity>| -> Vec<usize> {
        (0..p)
            .filter(|&k| i < sr.cdeg_fd[k] as isize)
            .filter(|&k| parity.is_none_or(|par| sr.parity[k] == par))
            .collect()
    };
    let i_sets: Vec<Vec<usize>> = (-1..=m).map(|i| select(i, None)).collect();
    let e_sets: Vec<Vec<usize>> = (-1..=m).map(|i| select(i, Some(Parity::Even))).collect();
    let o_sets: Vec<Vec<usize>> = (-1..=m).map(|i| select(i, Some(Parity::Odd))).collect();
    let tilde_sets = (0..=m)
        .map(|i| {
            let mut s = e_sets[(i + 1) as usize].clone();
            s.extend_from_slice(&o_sets[i as usize]);
            s.sort_unstable();
            s
        })
        .collect();
    IndexSets {
        i_sets,
        e_sets,
        o_sets,
        tilde_sets,
    }
}

/// `H₀` and `H₁` with the offsets of their block rows.
#[derive(Debug, Clone)]
pub struct HankelPair {
    pub h0: CMat,
    pub h1: CMat,
    /// `block_offsets_h0[i]` is the first row of block row `i`; the last
    /// entry is the size.
    pub block_offsets_h0: Vec<usize>,
    pub block_offsets_h1: Vec<usize>,
    pub all_even: bool,
}

// Block matrix with (i, j) block s[i + j + shift] restricted to rows sets[i]
// and columns sets[j].
fn block_hankel(seq: &MarkovSequence, sets: &[&[usize]], shift: usize) -> (CMat, Vec<usize>) {
    let mut offsets = vec![0];
    for s in sets {
        offsets.push(offsets.last().unwrap() + s.len());
    }
    let n = *offsets.last().unwrap();
    let mut h = linalg::zeros(n, n);
    for (i, rows) in sets.iter().enumerate() {
        for (j, cols) in sets.iter().enumerate() {
            let s = &seq.params[i + j + shift];
            for (a, &r) in rows.iter().enumerate() {
                for (b, &c) in cols.iter().enumerate() {
                    h[[offsets[i] + a, offsets[j] + b]] = s[[r, c]];
                }
            }
        }
    }
    (h, offsets)
}

/// Assembles `H₀ = (s_{i+j}[Ĩ_i, Ĩ_j])` and `H₁ = (s_{i+j+1}[I_i, I_j])`.
///
/// Block indices run over `0..m−1` for both matrices when every column
/// degree is even, and over `0..m` for `H₀` otherwise. Rows are selected by
/// the first index set, columns by the second. `H₁` is empty when `m = 0`.
pub fn assemble_hankel(
    seq: &MarkovSequence,
    idx: &IndexSets,
    sr: &SplitResult,
) -> Result<HankelPair> {
    if seq.params.len() < sr.l + 1 {
        return Err(Error::SequenceTooShort {
            needed: sr.l + 1,
            found: seq.params.len(),
        });
    }
    let h0_blocks = if sr.all_even { sr.m } else { sr.m + 1 };
    let tilde: Vec<&[usize]> = (0..h0_blocks).map(|i| idx.tilde_set(i)).collect();
    let plain: Vec<&[usize]> = (0..sr.m).map(|i| idx.i_set(i as isize)).collect();
    let (h0, block_offsets_h0) = block_hankel(seq, &tilde, 0);
    let (h1, block_offsets_h1) = block_hankel(seq, &plain, 1);
    Ok(HankelPair {
        h0,
        h1,
        block_offsets_h0,
        block_offsets_h1,
        all_even: sr.all_even,
    })
}
