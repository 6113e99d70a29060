use crate::error::{QsimError, Result};

/// Undirected coupling graph of a spin cluster.
///
/// Edges are normalized to `(low, high)` and kept in lexicographic order;
/// all ZZ terms commute, so the order only pins down a reproducible gate
/// sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinGraph {
    n_sites: usize,
    edges: Vec<(usize, usize)>,
}

impl SpinGraph {
    pub fn new(n_sites: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n_sites == 0 {
            return Err(QsimError::SiteOutOfRange {
                site: 0,
                n_sites: 0,
            });
        }
        let mut normalized: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == b {
                return Err(QsimError::SelfLoop { site: a });
            }
            for site in [a, b] {
                if site >= n_sites {
                    return Err(QsimError::SiteOutOfRange { site, n_sites });
                }
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        for w in normalized.windows(2) {
            if w[0] == w[1] {
                return Err(QsimError::DuplicateEdge {
                    a: w[0].0,
                    b: w[0].1,
                });
            }
        }
        Ok(Self {
            n_sites,
            edges: normalized,
        })
    }

    /// Rectangular grid with nearest-neighbor couplings; site index is
    /// `row * cols + col`. A 2x3 grid gives the six-spin cluster with seven
    /// edges used by the reference experiment.
    pub fn grid(rows: usize, cols: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                let site = r * cols + c;
                if c + 1 < cols {
                    edges.push((site, site + 1));
                }
                if r + 1 < rows {
                    edges.push((site, site + cols));
                }
            }
        }
        Self::new(rows * cols, &edges)
    }

    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }
}
