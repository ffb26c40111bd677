//! Contraction sequences: merging consecutive variables into windows.

use crate::algebra::{Generator, PolyGen};
use crate::error::{Error, Result};

/// `(i1 < ... < i(d+1))`, mapping `(x1..xn)` to `(x_{i1->i2}, ..., x_{id->i(d+1)})`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ContractionSeq {
    indices: Vec<u32>,
}

impl ContractionSeq {
    pub fn new(indices: Vec<u32>) -> Result<Self> {
        if indices.len() < 2 || indices[0] == 0 || indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::OutOfRange(format!("bad contraction sequence {:?}", indices)));
        }
        Ok(ContractionSeq { indices })
    }

    pub fn identity(n: u32) -> Self {
        ContractionSeq { indices: (1..=n + 1).collect() }
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    /// Number of output slots.
    pub fn depth(&self) -> usize {
        self.indices.len() - 1
    }

    /// Largest input variable the sequence reads.
    pub fn source_len(&self) -> u32 {
        self.indices[self.indices.len() - 1] - 1
    }

    /// Windows `[i_s, i_{s+1})` for each slot, for input of length `n`.
    pub fn contract(&self, n: u32) -> Result<Vec<(u32, u32)>> {
        if self.source_len() > n {
            return Err(Error::OutOfRange(format!(
                "contraction {:?} needs {} variables, got {}",
                self.indices,
                self.source_len(),
                n
            )));
        }
        Ok(self.indices.windows(2).map(|w| (w[0], w[1])).collect())
    }

    /// `i|j = (i_{j1}, ..., i_{j(f+1)})`: apply `i` first, then `j`.
    pub fn compose(&self, j: &ContractionSeq) -> Result<ContractionSeq> {
        if j.source_len() as usize > self.depth() {
            return Err(Error::OutOfRange(format!(
                "cannot compose {:?} with {:?}",
                self.indices, j.indices
            )));
        }
        Ok(ContractionSeq {
            indices: j.indices.iter().map(|&k| self.indices[(k - 1) as usize]).collect(),
        })
    }

    /// `[i(x1..xn)]_weights`.
    pub fn generator(&self, weights: &[u32]) -> Result<Generator> {
        Ok(Generator::Poly(PolyGen::new(self.indices.clone(), weights.to_vec(), false)?))
    }
}

/// All contraction sequences of depth `d` reading variables among `x1..xn`.
pub fn all_contractions(n: u32, d: usize) -> Vec<ContractionSeq> {
    fn rec(cur: &mut Vec<u32>, n: u32, want: usize, out: &mut Vec<ContractionSeq>) {
        if cur.len() == want {
            out.push(ContractionSeq { indices: cur.clone() });
            return;
        }
        let from = cur.last().map_or(1, |l| l + 1);
        for next in from..=n + 1 {
            cur.push(next);
            rec(cur, n, want, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), n, d + 1, &mut out);
    out
}
