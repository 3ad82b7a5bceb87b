//! Standard Young tableaux.

use crate::partition::Partition;

/// A filling of a Young diagram with the letters `0..n`, each once.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Self {
        Tableau { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Column `j` read top to bottom.
    pub fn column(&self, j: usize) -> Vec<usize> {
        self.rows
            .iter()
            .take_while(|r| r.len() > j)
            .map(|r| r[j])
            .collect()
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width).map(|j| self.column(j)).collect()
    }

    /// Row index of every letter.
    pub fn row_of(&self) -> Vec<usize> {
        let n = self.rows.iter().map(Vec::len).sum();
        let mut out = vec![0; n];
        for (i, row) in self.rows.iter().enumerate() {
            for &x in row {
                out[x] = i;
            }
        }
        out
    }

    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self
            .columns()
            .iter()
            .all(|c| c.windows(2).all(|w| w[0] < w[1]));
        rows_ok && cols_ok
    }
}

/// Every standard tableau of shape `mu`, in the order produced by placing
/// letters `0, 1, ...` into the topmost admissible row first.
pub fn standard_tableaux(mu: &Partition) -> Vec<Tableau> {
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); mu.len()];
    fill(mu, 0, mu.size(), &mut rows, &mut out);
    out
}

fn fill(mu: &Partition, next: usize, n: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
    if next == n {
        out.push(Tableau { rows: rows.clone() });
        return;
    }
    for i in 0..rows.len() {
        let len = rows[i].len();
        let fits = len < mu.part(i) && (i == 0 || rows[i - 1].len() > len);
        if fits {
            rows[i].push(next);
            fill(mu, next + 1, n, rows, out);
            rows[i].pop();
        }
    }
}
