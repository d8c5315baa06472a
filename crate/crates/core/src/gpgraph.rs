//! The multigraph of admissible signed Plücker relations. Two relations are
//! joined by an edge colored with a shared solid whenever the canonical
//! signs of the terms containing that solid are opposite (an indeterminate
//! sign is compatible with anything: eliminations across such edges fix the
//! exact sign themselves).

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::plucker::{enumerate_relations, EnumerationOptions, Relation, RelationKey};
use crate::solids::{FuzzySign, SolidId, SolidTable};

pub type NodeId = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Edge {
    pub color: SolidId,
    pub a: NodeId,
    pub b: NodeId,
}

/// Edge compatibility of two term signs: definite signs must be opposite,
/// an indeterminate sign matches anything.
pub fn signs_opposable(s1: FuzzySign, s2: FuzzySign) -> bool {
    s1 == FuzzySign::Unknown || s2 == FuzzySign::Unknown || s1 == -s2
}

#[derive(Debug, Clone, Default)]
pub struct BuildOptions {
    pub enumeration: EnumerationOptions,
    /// Materialize the edge list only while the node count stays below this
    /// bound; larger graphs serve edges lazily through the color index.
    pub edge_node_budget: Option<usize>,
}

const DEFAULT_EDGE_NODE_BUDGET: usize = 20_000;

/// The graph: all admissible ±relations, a per-color incidence index, and
/// (for small graphs) the materialized edge list.
pub struct GpGraph<'a, 'cx> {
    st: &'a SolidTable<'cx>,
    nodes: Vec<Relation>,
    key_index: HashMap<RelationKey, NodeId>,
    color_index: HashMap<SolidId, Vec<(NodeId, u8)>>,
    edges: Option<Vec<Edge>>,
    /// Per node: no term carries a definite negative sign, so every
    /// monomial the node contributes outside its eliminated terms is
    /// positive. Most published trees live in this subgraph.
    positive_usable: Vec<bool>,
}

impl<'a, 'cx> GpGraph<'a, 'cx> {
    pub fn build(st: &'a SolidTable<'cx>, opts: &BuildOptions) -> Self {
        let nodes = enumerate_relations(st, &opts.enumeration);
        Self::from_nodes(st, nodes, opts.edge_node_budget)
    }

    /// Builds from an explicit node list (used by tests with synthetic
    /// graphs). Nodes keep the given order.
    pub fn from_nodes(
        st: &'a SolidTable<'cx>,
        nodes: Vec<Relation>,
        edge_node_budget: Option<usize>,
    ) -> Self {
        let mut color_index: HashMap<SolidId, Vec<(NodeId, u8)>> = HashMap::new();
        let mut key_index = HashMap::new();
        for (ni, rel) in nodes.iter().enumerate() {
            key_index.insert(rel.key(), ni as NodeId);
            for (ti, t) in rel.terms.iter().enumerate() {
                // A solid never occurs twice within one relation: the six
                // term supports are pairwise distinct.
                debug_assert!(t.a != t.b);
                color_index.entry(t.a).or_default().push((ni as NodeId, ti as u8));
                color_index.entry(t.b).or_default().push((ni as NodeId, ti as u8));
            }
        }
        let positive_usable = nodes
            .iter()
            .map(|r| r.terms.iter().all(|t| t.sigma != FuzzySign::Minus))
            .collect();
        let mut graph = Self {
            st,
            nodes,
            key_index,
            color_index,
            edges: None,
            positive_usable,
        };
        let budget = edge_node_budget.unwrap_or(DEFAULT_EDGE_NODE_BUDGET);
        if graph.nodes.len() <= budget {
            graph.edges = Some(graph.materialize_edges());
        }
        graph
    }

    fn materialize_edges(&self) -> Vec<Edge> {
        let mut edges = Vec::new();
        for (&color, incidences) in &self.color_index {
            for (i, &(na, ta)) in incidences.iter().enumerate() {
                for &(nb, tb) in &incidences[i + 1..] {
                    if !self.is_edge_between(na, ta, nb, tb) {
                        continue;
                    }
                    let (a, b) = if na < nb { (na, nb) } else { (nb, na) };
                    edges.push(Edge { color, a, b });
                }
            }
        }
        edges.sort_unstable();
        edges.dedup();
        edges
    }

    fn is_edge_between(&self, na: NodeId, ta: u8, nb: NodeId, tb: u8) -> bool {
        if na == nb {
            return false;
        }
        let ra = &self.nodes[na as usize];
        let rb = &self.nodes[nb as usize];
        // ±Γ of the same relation share every solid with opposite signs;
        // combining them eliminates everything, so they are not joined.
        if ra.s == rb.s && ra.quad == rb.quad {
            return false;
        }
        let sa = ra.terms[ta as usize].sigma;
        let sb = rb.terms[tb as usize].sigma;
        signs_opposable(sa, sb)
    }

    pub fn solid_table(&self) -> &'a SolidTable<'cx> {
        self.st
    }

    pub fn nodes(&self) -> &[Relation] {
        &self.nodes
    }

    pub fn node(&self, id: NodeId) -> &Relation {
        &self.nodes[id as usize]
    }

    pub fn node_id(&self, key: &RelationKey) -> Option<NodeId> {
        self.key_index.get(key).copied()
    }

    /// True when no term of the node has a definite negative sign.
    pub fn positive_usable(&self, id: NodeId) -> bool {
        self.positive_usable[id as usize]
    }

    /// Incidences (node, term index) of a solid across all nodes.
    pub fn incidences(&self, color: SolidId) -> &[(NodeId, u8)] {
        self.color_index
            .get(&color)
            .map(|v| v.as_slice())
            .unwrap_or(&[])
    }

    /// Nodes joined to `node` by an edge of the given color, lazily.
    pub fn neighbors_by_color(&self, node: NodeId, color: SolidId) -> Vec<NodeId> {
        let Some(ti) = self.nodes[node as usize]
            .terms
            .iter()
            .position(|t| t.contains(color))
        else {
            return Vec::new();
        };
        let ti = ti as u8;
        let mut out = Vec::new();
        for &(nb, tb) in self.incidences(color) {
            if nb != node && self.is_edge_between(node, ti, nb, tb) {
                out.push(nb);
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// The materialized edge list; `None` when the graph exceeded the edge
    /// budget and serves edges lazily.
    pub fn edges(&self) -> Option<&[Edge]> {
        self.edges.as_deref()
    }

    pub fn edge_exists(&self, color: SolidId, a: NodeId, b: NodeId) -> bool {
        let Some(ta) = self.nodes[a as usize]
            .terms
            .iter()
            .position(|t| t.contains(color))
        else {
            return false;
        };
        let Some(tb) = self.nodes[b as usize]
            .terms
            .iter()
            .position(|t| t.contains(color))
        else {
            return false;
        };
        self.is_edge_between(a, ta as u8, b, tb as u8)
    }

    /// One line per edge: `colorKey nodeIdA nodeIdB`, for external
    /// inspection.
    pub fn dump_edges(&self) -> Option<String> {
        let edges = self.edges()?;
        let mut out = String::new();
        for e in edges {
            let key = self
                .st
                .support(e.color)
                .iter()
                .map(|&v| self.st.complex().vertices().label(v))
                .collect::<Vec<_>>()
                .join("");
            let _ = writeln!(out, "{key} {} {}", e.a, e.b);
        }
        Some(out)
    }
}

/// A concrete tree candidate: relations plus edges referencing them by
/// position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeSelection {
    pub nodes: Vec<Relation>,
    /// (color, node index, node index) triples.
    pub edges: Vec<(SolidId, usize, usize)>,
}

/// Validates a Plücker tree candidate: edges join distinct selected nodes
/// through a shared solid with opposable term signs, at most one edge per
/// node pair, the subgraph is a tree, and every unknown solid of every node
/// is met by exactly one incident edge of that color.
pub fn tree_candidate_check(st: &SolidTable, sel: &TreeSelection) -> Result<(), String> {
    let n = sel.nodes.len();
    if n == 0 {
        return Err("empty selection".to_owned());
    }
    if sel.edges.len() + 1 != n {
        return Err(format!(
            "{} nodes but {} edges; a tree needs |V| = |E|+1",
            n,
            sel.edges.len()
        ));
    }
    let mut pair_seen = std::collections::BTreeSet::new();
    for &(color, a, b) in &sel.edges {
        if a >= n || b >= n {
            return Err("edge endpoint out of range".to_owned());
        }
        if a == b {
            return Err("self-loop edge".to_owned());
        }
        if !pair_seen.insert((a.min(b), a.max(b))) {
            return Err("two edges between the same node pair".to_owned());
        }
        let ta = sel.nodes[a].term_with(color);
        let tb = sel.nodes[b].term_with(color);
        let (Some(ta), Some(tb)) = (ta, tb) else {
            return Err(format!(
                "edge color {} does not occur in both endpoints",
                st.render(color)
            ));
        };
        if !signs_opposable(ta.sigma, tb.sigma) {
            return Err(format!(
                "edge color {} has non-opposable term signs {} and {}",
                st.render(color),
                ta.sigma,
                tb.sigma
            ));
        }
    }
    // Connectivity: |E| = |V|-1 plus connectedness is acyclicity.
    let mut adj = vec![Vec::new(); n];
    for &(_, a, b) in &sel.edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    if count != n {
        return Err("selection is not connected".to_owned());
    }
    // Unknown coverage: exactly one incident edge per unknown solid.
    for (ni, rel) in sel.nodes.iter().enumerate() {
        for u in rel.unknown_solids(st) {
            let incident = sel
                .edges
                .iter()
                .filter(|&&(color, a, b)| color == u && (a == ni || b == ni))
                .count();
            if incident != 1 {
                return Err(format!(
                    "unknown solid {} of node {} covered by {} edges (need exactly 1)",
                    st.render(u),
                    rel.render(st),
                    incident
                ));
            }
        }
    }
    Ok(())
}
