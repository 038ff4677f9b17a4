//! Brute-force simple-path enumeration. Only usable on tiny networks; the
//! batch verifier gates it by [`ORACLE_MAX_NODES`].

use std::collections::BTreeSet;

use crate::network::{NodeId, StringNetwork};
use crate::rational::Rational;

pub const ORACLE_MAX_NODES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathEnumeration {
    /// Minimum total length over all simple source–target paths.
    pub min_length: Rational,
    /// Minimum number of strings over all simple source–target paths.
    pub min_hops: usize,
    /// Edge indices used by at least one minimum-length path.
    pub shortest_edges: BTreeSet<usize>,
}

/// Enumerates every simple source–target path. `None` if there is none.
pub fn enumerate_paths(net: &StringNetwork) -> Option<PathEnumeration> {
    struct Walk<'a> {
        net: &'a StringNetwork,
        on_path: Vec<bool>,
        edges: Vec<usize>,
        best: Option<(Rational, Vec<Vec<usize>>)>,
        min_hops: Option<usize>,
    }

    impl Walk<'_> {
        fn visit(&mut self, x: NodeId, length: Rational) {
            if x == self.net.target() {
                let hops = self.edges.len();
                self.min_hops = Some(self.min_hops.map_or(hops, |h| h.min(hops)));
                match &mut self.best {
                    Some((best, paths)) if *best == length => paths.push(self.edges.clone()),
                    Some((best, _)) if *best < length => {}
                    _ => self.best = Some((length, vec![self.edges.clone()])),
                }
                return;
            }
            for &(y, e) in self.net.neighbors(x) {
                if self.on_path[y.index()] {
                    continue;
                }
                self.on_path[y.index()] = true;
                self.edges.push(e);
                let next = &length + &self.net.edge(e).length;
                self.visit(y, next);
                self.edges.pop();
                self.on_path[y.index()] = false;
            }
        }
    }

    let mut walk = Walk {
        net,
        on_path: vec![false; net.node_count()],
        edges: Vec::new(),
        best: None,
        min_hops: None,
    };
    walk.on_path[net.source().index()] = true;
    walk.visit(net.source(), Rational::default());
    let (min_length, paths) = walk.best?;
    Some(PathEnumeration {
        min_length,
        min_hops: walk.min_hops?,
        shortest_edges: paths.into_iter().flatten().collect(),
    })
}

/// Whether `path` starts at the source, ends at the target, follows strings,
/// and has total length `length`.
pub fn path_length(net: &StringNetwork, path: &[NodeId]) -> Option<Rational> {
    if path.first() != Some(&net.source()) || path.last() != Some(&net.target()) {
        return None;
    }
    let mut total = Rational::default();
    for pair in path.windows(2) {
        let &(_, e) = net.neighbors(pair[0]).iter().find(|(y, _)| *y == pair[1])?;
        total += &net.edge(e).length;
    }
    Some(total)
}
