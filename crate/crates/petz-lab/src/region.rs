use crate::error::{Error, Result};

/// Label for the standard tripartite (plus traced-out remainder) cuts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegionLabel {
    A,
    B,
    C,
    D,
    Custom,
}

/// An ordered set of site (or qubit) indices.
///
/// Regions are plain index sets; whether an index means a lattice site
/// carrying two Majorana modes or a single qubit is decided by the backend
/// consuming the region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    sites: Vec<usize>,
    pub label: RegionLabel,
}

impl Region {
    pub fn new(sites: Vec<usize>, label: RegionLabel) -> Result<Self> {
        let mut seen = sites.clone();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("region contains duplicate site indices"));
        }
        Ok(Region { sites, label })
    }

    /// Contiguous interval `[start, start + len)`.
    pub fn interval(start: usize, len: usize, label: RegionLabel) -> Self {
        Region {
            sites: (start..start + len).collect(),
            label,
        }
    }

    pub fn custom(sites: Vec<usize>) -> Result<Self> {
        Region::new(sites, RegionLabel::Custom)
    }

    pub fn sites(&self) -> &[usize] {
        &self.sites
    }

    pub fn len(&self) -> usize {
        self.sites.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }

    pub fn contains(&self, site: usize) -> bool {
        self.sites.contains(&site)
    }

    /// Concatenation, preserving order. Errors on overlap.
    pub fn union(&self, other: &Region) -> Result<Region> {
        let mut sites = self.sites.clone();
        for &s in &other.sites {
            if sites.contains(&s) {
                return Err(Error::invalid(format!("regions overlap at site {s}")));
            }
            sites.push(s);
        }
        Region::new(sites, RegionLabel::Custom)
    }

    /// Majorana mode indices for a fermionic region: site j carries modes
    /// (2j, 2j+1).
    pub fn majorana_indices(&self) -> Vec<usize> {
        self.sites.iter().flat_map(|&s| [2 * s, 2 * s + 1]).collect()
    }

    pub fn check_within(&self, num_sites: usize) -> Result<()> {
        match self.sites.iter().find(|&&s| s >= num_sites) {
            Some(&s) => Err(Error::invalid(format!(
                "site index {s} out of range for {num_sites} sites"
            ))),
            None => Ok(()),
        }
    }
}

/// Check that regions are pairwise disjoint.
pub fn check_disjoint(regions: &[&Region]) -> Result<()> {
    for (i, r) in regions.iter().enumerate() {
        for s in r.sites() {
            for other in regions.iter().skip(i + 1) {
                if other.contains(*s) {
                    return Err(Error::invalid(format!("regions overlap at site {s}")));
                }
            }
        }
    }
    Ok(())
}
