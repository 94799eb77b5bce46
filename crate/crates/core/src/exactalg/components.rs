//! Splits a sparse matrix into the connected components of its row/column
//! incidence graph. Rank, echelon form and kernel all decompose over them.

struct DisjointSet {
    parent: Vec<usize>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        DisjointSet {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Rows and columns of one block, both ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

/// Blocks that contain at least one nonzero entry, ordered by smallest column.
/// Zero rows and zero columns belong to no block.
pub fn blocks<T>(nrows: usize, columns: &[Vec<(usize, T)>]) -> Vec<Block> {
    let ncols = columns.len();
    let mut ds = DisjointSet::new(nrows + ncols);
    for (c, col) in columns.iter().enumerate() {
        for (r, _) in col {
            ds.union(*r, nrows + c);
        }
    }
    let mut slot = vec![usize::MAX; nrows + ncols];
    let mut out: Vec<Block> = Vec::new();
    for (c, col) in columns.iter().enumerate() {
        if col.is_empty() {
            continue;
        }
        let root = ds.find(nrows + c);
        if slot[root] == usize::MAX {
            slot[root] = out.len();
            out.push(Block {
                rows: Vec::new(),
                cols: Vec::new(),
            });
        }
        out[slot[root]].cols.push(c);
    }
    for r in 0..nrows {
        let root = ds.find(r);
        if slot[root] != usize::MAX {
            out[slot[root]].rows.push(r);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_splits_fully() {
        let cols = vec![vec![(0, 1)], vec![(1, 1)], vec![], vec![(2, 5)]];
        let b = blocks(4, &cols);
        assert_eq!(b.len(), 3);
        assert_eq!(b[2], Block { rows: vec![2], cols: vec![3] });
    }

    #[test]
    fn shared_row_merges() {
        let cols = vec![vec![(0, 1), (2, 1)], vec![(1, 1)], vec![(2, 1)]];
        let b = blocks(3, &cols);
        assert_eq!(b.len(), 2);
        assert_eq!(b[0].cols, vec![0, 2]);
        assert_eq!(b[0].rows, vec![0, 2]);
    }
}
