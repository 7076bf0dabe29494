use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// `Z_{n1} × … × Z_{nk}`. The empty order list is the trivial group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    orders: Vec<u32>,
}

/// Element of a [`FiniteAbelianGroup`], each residue in `[0, n_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(Vec<u32>);

impl FiniteAbelianGroup {
    pub fn new(orders: &[i64]) -> Result<Self> {
        let orders = orders
            .iter()
            .map(|&n| {
                if n >= 1 && n <= u32::MAX as i64 {
                    Ok(n as u32)
                } else {
                    Err(Error::InvalidOrder(n))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FiniteAbelianGroup { orders })
    }

    pub fn trivial() -> Self {
        FiniteAbelianGroup { orders: Vec::new() }
    }

    pub fn cyclic(n: u32) -> Self {
        assert!(n >= 1, "cyclic group order must be positive");
        FiniteAbelianGroup { orders: vec![n] }
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    /// `|G|`
    pub fn order(&self) -> usize {
        self.orders.iter().map(|&n| n as usize).product()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(vec![0; self.orders.len()])
    }

    /// Validated element; residues must already be canonical.
    pub fn element(&self, residues: &[i64]) -> Result<GroupElement> {
        let out_of_range = || Error::ElementOutOfRange {
            element: residues.to_vec(),
            orders: self.orders.clone(),
        };
        if residues.len() != self.orders.len() {
            return Err(out_of_range());
        }
        residues
            .iter()
            .zip(&self.orders)
            .map(|(&r, &n)| {
                if r >= 0 && r < n as i64 {
                    Ok(r as u32)
                } else {
                    Err(out_of_range())
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(GroupElement)
    }

    /// Element with residues reduced mod each order.
    pub fn element_reduced(&self, residues: &[i64]) -> GroupElement {
        assert_eq!(residues.len(), self.orders.len(), "rank mismatch");
        GroupElement(
            residues
                .iter()
                .zip(&self.orders)
                .map(|(&r, &n)| r.rem_euclid(n as i64) as u32)
                .collect(),
        )
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        x.0.len() == self.orders.len() && x.0.iter().zip(&self.orders).all(|(r, n)| r < n)
    }

    pub fn add(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        GroupElement(
            x.0.iter()
                .zip(&y.0)
                .zip(&self.orders)
                .map(|((a, b), n)| ((*a as u64 + *b as u64) % *n as u64) as u32)
                .collect(),
        )
    }

    pub fn neg(&self, x: &GroupElement) -> GroupElement {
        GroupElement(x.0.iter().zip(&self.orders).map(|(a, n)| (n - a) % n).collect())
    }

    /// Position of `x` in [`FiniteAbelianGroup::enumerate`] order.
    pub fn index_of(&self, x: &GroupElement) -> usize {
        x.0.iter()
            .zip(&self.orders)
            .fold(0usize, |acc, (r, n)| acc * *n as usize + *r as usize)
    }

    pub fn element_at(&self, mut index: usize) -> GroupElement {
        let mut residues = vec![0u32; self.orders.len()];
        for (slot, n) in residues.iter_mut().zip(&self.orders).rev() {
            *slot = (index % *n as usize) as u32;
            index /= *n as usize;
        }
        GroupElement(residues)
    }

    /// All elements in lexicographic order of residues.
    pub fn enumerate(&self) -> Vec<GroupElement> {
        (0..self.order()).map(|i| self.element_at(i)).collect()
    }
}

impl GroupElement {
    pub fn residues(&self) -> &[u32] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&r| r == 0)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str(")")
    }
}

impl Serialize for GroupElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}
