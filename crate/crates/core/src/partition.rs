//! Set partitions of row/column index ranges and co-clusterings.
//!
//! Indices are 0-based throughout the library. The serialization layer
//! (`to_one_based`) converts to the 1-based convention used in reports.

use serde::Serialize;

use crate::error::{invalid, Result};

/// An ordered list of disjoint, non-empty blocks covering `0..ground_size`.
///
/// Each block is kept sorted ascending. Block order is significant for display
/// and for deterministic tie-breaking, but two partitions with the same blocks
/// in a different order describe the same grouping (see [`Partition::canonical`]).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    ground_size: usize,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Validates and builds a partition. Blocks are sorted internally.
    pub fn new(ground_size: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; ground_size];
        let mut blocks = blocks;
        for block in &mut blocks {
            if block.is_empty() {
                return Err(invalid("partition blocks must be non-empty"));
            }
            block.sort_unstable();
            for &x in block.iter() {
                if x >= ground_size {
                    return Err(invalid(format!("index {x} outside ground set of size {ground_size}")));
                }
                if seen[x] {
                    return Err(invalid(format!("index {x} appears in two blocks")));
                }
                seen[x] = true;
            }
        }
        if let Some(x) = seen.iter().position(|&s| !s) {
            return Err(invalid(format!("index {x} is not covered by any block")));
        }
        Ok(Partition { ground_size, blocks })
    }

    /// Builds a partition from 1-based blocks.
    pub fn from_one_based(ground_size: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let blocks = blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|&x| x.checked_sub(1).ok_or_else(|| invalid("1-based index 0")))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(ground_size, blocks)
    }

    /// Groups indices by label. Blocks appear in increasing label order; labels
    /// that are never used do not produce a block.
    pub fn from_labels(labels: &[usize]) -> Partition {
        let max = labels.iter().copied().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); max];
        for (x, &label) in labels.iter().enumerate() {
            blocks[label].push(x);
        }
        blocks.retain(|b| !b.is_empty());
        Partition {
            ground_size: labels.len(),
            blocks,
        }
    }

    /// A single block holding everything.
    pub fn whole(ground_size: usize) -> Partition {
        Partition {
            ground_size,
            blocks: vec![(0..ground_size).collect()],
        }
    }

    pub fn singletons(ground_size: usize) -> Partition {
        Partition {
            ground_size,
            blocks: (0..ground_size).map(|x| vec![x]).collect(),
        }
    }

    /// `count` contiguous blocks whose sizes differ by at most one.
    pub fn balanced(ground_size: usize, count: usize) -> Result<Partition> {
        if count == 0 || count > ground_size {
            return Err(invalid(format!(
                "cannot split {ground_size} indices into {count} non-empty blocks"
            )));
        }
        let base = ground_size / count;
        let extra = ground_size % count;
        let mut blocks = Vec::with_capacity(count);
        let mut start = 0;
        for b in 0..count {
            let size = base + usize::from(b < extra);
            blocks.push((start..start + size).collect());
            start += size;
        }
        Ok(Partition { ground_size, blocks })
    }

    /// Splits blocks until there are exactly `target` of them.
    ///
    /// Each step takes the largest block (lowest position on ties) and moves its
    /// highest index into a new singleton block appended at the end. Splitting
    /// never increases the cost of a co-clustering.
    pub fn split_to(mut self, target: usize) -> Result<Partition> {
        if target < self.blocks.len() {
            return Err(invalid(format!(
                "partition already has {} blocks, cannot reach {target} by splitting",
                self.blocks.len()
            )));
        }
        if target > self.ground_size {
            return Err(invalid(format!(
                "cannot form {target} non-empty blocks over {} indices",
                self.ground_size
            )));
        }
        while self.blocks.len() < target {
            let (largest, _) = self
                .blocks
                .iter()
                .enumerate()
                .max_by(|(ia, a), (ib, b)| a.len().cmp(&b.len()).then(ib.cmp(ia)))
                .expect("ground set is non-empty");
            let moved = self.blocks[largest].pop().expect("largest block has >= 2 indices");
            self.blocks.push(vec![moved]);
        }
        Ok(self)
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block(&self, b: usize) -> &[usize] {
        &self.blocks[b]
    }

    /// Block index of every element.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.ground_size];
        for (b, block) in self.blocks.iter().enumerate() {
            for &x in block {
                labels[x] = b;
            }
        }
        labels
    }

    pub fn to_one_based(&self) -> Vec<Vec<usize>> {
        self.blocks
            .iter()
            .map(|b| b.iter().map(|&x| x + 1).collect())
            .collect()
    }

    /// Same grouping with blocks ordered by their smallest element.
    pub fn canonical(&self) -> Partition {
        let mut blocks = self.blocks.clone();
        blocks.sort_unstable_by_key(|b| b[0]);
        Partition {
            ground_size: self.ground_size,
            blocks,
        }
    }

    /// True if both partitions group the elements identically.
    pub fn same_grouping(&self, other: &Partition) -> bool {
        self.canonical() == other.canonical()
    }
}

/// A pair of row and column partitions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoClustering {
    pub rows: Partition,
    pub cols: Partition,
}

impl CoClustering {
    pub fn new(rows: Partition, cols: Partition) -> Self {
        CoClustering { rows, cols }
    }

    /// The equivalent co-clustering of the transposed matrix.
    pub fn transpose(self) -> CoClustering {
        CoClustering {
            rows: self.cols,
            cols: self.rows,
        }
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows.len(), self.cols.len())
    }

    pub fn to_one_based(&self) -> OneBasedCoClustering {
        OneBasedCoClustering {
            row_blocks: self.rows.to_one_based(),
            col_blocks: self.cols.to_one_based(),
        }
    }
}

/// Serializable 1-based view of a co-clustering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OneBasedCoClustering {
    pub row_blocks: Vec<Vec<usize>>,
    pub col_blocks: Vec<Vec<usize>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Partition::new(3, vec![vec![0, 1], vec![2]]).is_ok());
        assert!(Partition::new(3, vec![vec![0, 1], vec![]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 1]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 1, 3]]).is_err());
    }

    #[test]
    fn split_moves_highest_index_of_largest_block() {
        let p = Partition::whole(2).split_to(2).unwrap();
        assert_eq!(p.blocks(), &[vec![0], vec![1]]);

        let p = Partition::new(5, vec![vec![0, 1], vec![2, 3, 4]]).unwrap();
        let p = p.split_to(4).unwrap();
        assert_eq!(p.blocks(), &[vec![0], vec![2, 3], vec![4], vec![1]]);
        assert!(Partition::whole(2).split_to(3).is_err());
        assert!(Partition::singletons(3).split_to(2).is_err());
    }

    #[test]
    fn labels_roundtrip_and_drop_unused() {
        let p = Partition::from_labels(&[2, 0, 2, 0]);
        assert_eq!(p.blocks(), &[vec![1, 3], vec![0, 2]]);
        assert_eq!(Partition::from_labels(&p.labels()), p);
    }

    #[test]
    fn balanced_blocks() {
        let p = Partition::balanced(7, 3).unwrap();
        assert_eq!(p.blocks(), &[vec![0, 1, 2], vec![3, 4], vec![5, 6]]);
        assert!(Partition::balanced(2, 3).is_err());
        assert!(Partition::balanced(2, 0).is_err());
    }

    #[test]
    fn one_based_conversion() {
        let p = Partition::from_one_based(3, &[vec![2], vec![1, 3]]).unwrap();
        assert_eq!(p.blocks(), &[vec![1], vec![0, 2]]);
        assert_eq!(p.to_one_based(), vec![vec![2], vec![1, 3]]);
        assert!(Partition::from_one_based(3, &[vec![0, 1, 2]]).is_err());
        assert!(p.same_grouping(&Partition::new(3, vec![vec![0, 2], vec![1]]).unwrap()));
    }
}
