use std::collections::BTreeMap;

use crate::group::PermGroup;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeNode {
    pub group: PermGroup,
    /// λ(G)-stability, when the lattice lives inside some `N`.
    pub stable: Option<bool>,
    /// Index of the stable subgroup a correspondence-image node came from.
    pub origin: Option<usize>,
}

impl LatticeNode {
    pub fn order(&self) -> usize {
        self.group.order()
    }
}

/// A finite family of subgroups ordered by inclusion, kept as its Hasse
/// diagram. Nodes are sorted by (order, element set); edges `(i, j)` mean
/// node `i` is covered by node `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupLattice {
    pub nodes: Vec<LatticeNode>,
    pub edges: Vec<(usize, usize)>,
}

impl SubgroupLattice {
    pub fn from_groups(groups: Vec<PermGroup>) -> SubgroupLattice {
        Self::from_nodes(
            groups
                .into_iter()
                .map(|group| LatticeNode {
                    group,
                    stable: None,
                    origin: None,
                })
                .collect(),
        )
    }

    pub fn from_nodes(mut nodes: Vec<LatticeNode>) -> SubgroupLattice {
        nodes.sort_by(|a, b| a.group.cmp(&b.group));
        nodes.dedup_by(|a, b| a.group == b.group);
        let k = nodes.len();
        let below: Vec<Vec<bool>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| i != j && nodes[i].group.is_subgroup_of(&nodes[j].group))
                    .collect()
            })
            .collect();
        let mut edges = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if below[i][j] && !(0..k).any(|m| below[i][m] && below[m][j]) {
                    edges.push((i, j));
                }
            }
        }
        SubgroupLattice { nodes, edges }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn groups(&self) -> impl Iterator<Item = &PermGroup> {
        self.nodes.iter().map(|n| &n.group)
    }

    pub fn position(&self, g: &PermGroup) -> Option<usize> {
        self.nodes.iter().position(|n| &n.group == g)
    }

    pub fn contains(&self, g: &PermGroup) -> bool {
        self.position(g).is_some()
    }

    /// Number of nodes of each order.
    pub fn count_by_order(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for n in &self.nodes {
            *m.entry(n.order()).or_insert(0) += 1;
        }
        m
    }

    /// True iff `i ⊆ j` as subgroups (reflexive).
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.nodes[i].group.is_subgroup_of(&self.nodes[j].group)
    }
}
