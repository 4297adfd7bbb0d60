use std::collections::VecDeque;

use num_traits::{Signed, Zero};

use crate::{Error, Rational, Result};

/// Directed network with nonnegative exact capacities and distinguished terminals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowNetwork {
    nodes: usize,
    source: usize,
    sink: usize,
    arcs: Vec<(usize, usize, Rational)>,
}

impl FlowNetwork {
    pub fn new(nodes: usize, source: usize, sink: usize) -> Result<Self> {
        if source >= nodes || sink >= nodes || source == sink {
            return Err(Error::InvalidPartition(format!(
                "terminals {source}, {sink} invalid for {nodes} nodes"
            )));
        }
        Ok(FlowNetwork {
            nodes,
            source,
            sink,
            arcs: Vec::new(),
        })
    }

    /// Adds an arc; returns its index.
    pub fn add_arc(&mut self, from: usize, to: usize, capacity: Rational) -> Result<usize> {
        if capacity.is_negative() {
            return Err(Error::InvalidPartition(format!(
                "arc {from}->{to} has negative capacity {capacity}"
            )));
        }
        for v in [from, to] {
            if v >= self.nodes {
                return Err(Error::UnknownPlayer {
                    player: v,
                    players: self.nodes,
                });
            }
        }
        self.arcs.push((from, to, capacity));
        Ok(self.arcs.len() - 1)
    }

    pub fn node_count(&self) -> usize {
        self.nodes
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn arcs(&self) -> &[(usize, usize, Rational)] {
        &self.arcs
    }
}

/// A minimum s-t cut together with a maximum flow certifying it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinCut {
    pub value: Rational,
    /// `true` for nodes on the source side.
    pub source_side: Vec<bool>,
    /// Flow on each arc, indexed like [`FlowNetwork::arcs`].
    pub flow: Vec<Rational>,
}

impl MinCut {
    /// Checks capacity and conservation constraints, that the flow value equals
    /// the cut capacity, and that the cut separates the terminals.
    pub fn certify(&self, network: &FlowNetwork) -> bool {
        let mut excess = vec![Rational::zero(); network.nodes];
        let mut cut_capacity = Rational::zero();
        for (&(u, v, cap), &f) in network.arcs.iter().zip(&self.flow) {
            if f.is_negative() || f > cap {
                return false;
            }
            excess[u] -= f;
            excess[v] += f;
            if self.source_side[u] && !self.source_side[v] {
                cut_capacity += cap;
            }
        }
        let conserved = (0..network.nodes)
            .filter(|&v| v != network.source && v != network.sink)
            .all(|v| excess[v].is_zero());
        conserved
            && self.source_side[network.source]
            && !self.source_side[network.sink]
            && excess[network.sink] == self.value
            && cut_capacity == self.value
    }
}

/// Edmonds–Karp max flow; the source side of the returned cut is the set of
/// nodes reachable from the source in the final residual graph.
pub fn min_cut(network: &FlowNetwork) -> MinCut {
    let n = network.nodes;
    // Residual arcs come in pairs: 2i forward, 2i+1 backward.
    let mut residual: Vec<Rational> = Vec::with_capacity(2 * network.arcs.len());
    let mut head = Vec::with_capacity(2 * network.arcs.len());
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (idx, &(u, v, cap)) in network.arcs.iter().enumerate() {
        residual.push(cap);
        head.push(v);
        out[u].push(2 * idx);
        residual.push(Rational::zero());
        head.push(u);
        out[v].push(2 * idx + 1);
    }

    let bfs = |residual: &[Rational]| -> Vec<Option<usize>> {
        let mut parent: Vec<Option<usize>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[network.source] = true;
        let mut queue = VecDeque::from([network.source]);
        while let Some(u) = queue.pop_front() {
            for &e in &out[u] {
                let v = head[e];
                if !seen[v] && residual[e].is_positive() {
                    seen[v] = true;
                    parent[v] = Some(e);
                    queue.push_back(v);
                }
            }
        }
        parent
    };

    let mut value = Rational::zero();
    loop {
        let parent = bfs(&residual);
        if parent[network.sink].is_none() {
            let mut source_side: Vec<bool> = parent.iter().map(Option::is_some).collect();
            source_side[network.source] = true;
            let flow = (0..network.arcs.len())
                .map(|i| residual[2 * i + 1])
                .collect();
            return MinCut {
                value,
                source_side,
                flow,
            };
        }
        let mut bottleneck: Option<Rational> = None;
        let mut v = network.sink;
        while let Some(e) = parent[v] {
            bottleneck = Some(bottleneck.map_or(residual[e], |b| b.min(residual[e])));
            v = head[e ^ 1];
        }
        let push = bottleneck.expect("augmenting path has at least one arc");
        let mut v = network.sink;
        while let Some(e) = parent[v] {
            residual[e] -= push;
            residual[e ^ 1] += push;
            v = head[e ^ 1];
        }
        value += push;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int, ratio};

    #[test]
    fn single_arc() {
        let mut net = FlowNetwork::new(2, 0, 1).unwrap();
        net.add_arc(0, 1, int(5)).unwrap();
        let cut = min_cut(&net);
        assert_eq!(cut.value, int(5));
        assert!(cut.certify(&net));
    }

    #[test]
    fn parallel_paths() {
        let mut net = FlowNetwork::new(4, 0, 3).unwrap();
        net.add_arc(0, 1, int(2)).unwrap();
        net.add_arc(1, 3, int(2)).unwrap();
        net.add_arc(0, 2, int(3)).unwrap();
        net.add_arc(2, 3, int(3)).unwrap();
        let cut = min_cut(&net);
        assert_eq!(cut.value, int(5));
        assert!(cut.certify(&net));
    }

    #[test]
    fn bottleneck() {
        let mut net = FlowNetwork::new(3, 0, 2).unwrap();
        net.add_arc(0, 1, int(10)).unwrap();
        net.add_arc(1, 2, int(1)).unwrap();
        let cut = min_cut(&net);
        assert_eq!(cut.value, int(1));
        assert_eq!(cut.source_side, vec![true, true, false]);
        assert!(cut.certify(&net));
    }

    #[test]
    fn rational_capacities_and_back_edges() {
        // classic network where a shortest path must be partly undone
        let mut net = FlowNetwork::new(4, 0, 3).unwrap();
        net.add_arc(0, 1, ratio(1, 2)).unwrap();
        net.add_arc(0, 2, ratio(1, 3)).unwrap();
        net.add_arc(1, 2, int(1)).unwrap();
        net.add_arc(1, 3, ratio(1, 4)).unwrap();
        net.add_arc(2, 3, int(1)).unwrap();
        let cut = min_cut(&net);
        assert_eq!(cut.value, ratio(5, 6));
        assert!(cut.certify(&net));
    }

    #[test]
    fn rejects_bad_networks() {
        assert!(FlowNetwork::new(2, 0, 0).is_err());
        let mut net = FlowNetwork::new(2, 0, 1).unwrap();
        assert!(net.add_arc(0, 1, int(-1)).is_err());
        assert!(net.add_arc(0, 2, int(1)).is_err());
    }
}
