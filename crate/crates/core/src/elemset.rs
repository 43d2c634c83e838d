use crate::bits::Bits256;
use crate::ring::RingId;

/// What closure properties an [`ElementSet`] is known to have.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SetRole {
    Subring,
    AdditiveSubgroup,
    Plain,
}

/// A subset of a ring, stored as a membership bit vector over element indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ElementSet {
    ring: RingId,
    order: u16,
    members: Bits256,
    role: SetRole,
}

impl ElementSet {
    pub(crate) fn from_parts(ring: RingId, order: usize, members: Bits256, role: SetRole) -> Self {
        debug_assert!(members.iter().all(|i| i < order));
        ElementSet {
            ring,
            order: order as u16,
            members,
            role,
        }
    }

    pub fn ring(&self) -> RingId {
        self.ring
    }

    /// Order of the parent ring (length of the membership vector).
    pub fn ring_order(&self) -> usize {
        self.order as usize
    }

    pub fn role(&self) -> SetRole {
        self.role
    }

    pub fn members(&self) -> &Bits256 {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.order as usize && self.members.contains(index)
    }

    /// Member indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    pub fn indices(&self) -> Vec<usize> {
        self.members.to_vec()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn same_ring(&self, other: &ElementSet) -> bool {
        self.ring == other.ring
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        self.plain(self.members.union(&other.members))
    }

    /// Intersection; two subrings (or subgroups) intersect in a subring (subgroup).
    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        let role = self.role.max(other.role);
        ElementSet {
            role,
            ..self.plain(self.members.intersection(&other.members))
        }
    }

    pub fn difference(&self, other: &ElementSet) -> ElementSet {
        self.plain(self.members.difference(&other.members))
    }

    pub fn with_role(mut self, role: SetRole) -> ElementSet {
        self.role = role;
        self
    }

    fn plain(&self, members: Bits256) -> ElementSet {
        ElementSet {
            ring: self.ring,
            order: self.order,
            members,
            role: SetRole::Plain,
        }
    }
}
