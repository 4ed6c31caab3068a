//! Row reduction over F_q, used for code identity and span membership.

use crate::field::{Elem, FiniteField};

/// A subspace of F_q^n held in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RowSpace {
    rows: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
    len: usize,
}

impl RowSpace {
    pub fn from_rows(field: &FiniteField, len: usize, rows: &[Vec<Elem>]) -> Self {
        let mut m: Vec<Vec<Elem>> = rows.to_vec();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..len {
            let Some(pivot_row) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
                continue;
            };
            m.swap(rank, pivot_row);
            let inv = field.inv(m[rank][col]).expect("pivot is nonzero");
            for c in m[rank].iter_mut() {
                *c = field.mul(inv, *c);
            }
            for i in 0..m.len() {
                if i == rank || m[i][col].is_zero() {
                    continue;
                }
                let factor = m[i][col];
                let pivot = m[rank].clone();
                for (c, &b) in m[i].iter_mut().zip(&pivot) {
                    *c = field.sub(*c, field.mul(factor, b));
                }
            }
            pivots.push(col);
            rank += 1;
        }
        m.truncate(rank);
        RowSpace {
            rows: m,
            pivots,
            len,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    pub fn contains(&self, field: &FiniteField, v: &[Elem]) -> bool {
        if v.len() != self.len {
            return false;
        }
        let mut rest = v.to_vec();
        for (row, &col) in self.rows.iter().zip(&self.pivots) {
            let factor = rest[col];
            if factor.is_zero() {
                continue;
            }
            for (r, &b) in rest.iter_mut().zip(row) {
                *r = field.sub(*r, field.mul(factor, b));
            }
        }
        rest.iter().all(|c| c.is_zero())
    }
}
