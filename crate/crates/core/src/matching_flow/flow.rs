use std::collections::VecDeque;

/// Residual network with breadth-first (shortest) augmenting paths.
#[derive(Debug, Clone)]
pub(crate) struct FlowNetwork {
    head: Vec<usize>,
    cap: Vec<u64>,
    adj: Vec<Vec<usize>>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork {
            head: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); nodes],
        }
    }

    /// Adds `from -> to` with the given capacity; returns the arc id whose
    /// flow can later be read with [`FlowNetwork::flow`].
    pub fn add_arc(&mut self, from: usize, to: usize, capacity: u64) -> usize {
        let id = self.head.len();
        self.head.push(to);
        self.cap.push(capacity);
        self.adj[from].push(id);
        self.head.push(from);
        self.cap.push(0);
        self.adj[to].push(id + 1);
        id
    }

    /// Flow currently on arc `id` (the residual capacity of its twin).
    pub fn flow(&self, id: usize) -> u64 {
        self.cap[id ^ 1]
    }

    pub fn max_flow(&mut self, source: usize, sink: usize) -> u64 {
        let mut total = 0;
        let n = self.adj.len();
        loop {
            let mut via = vec![usize::MAX; n];
            let mut queue = VecDeque::from([source]);
            let mut reached = vec![false; n];
            reached[source] = true;
            while let Some(u) = queue.pop_front() {
                if u == sink {
                    break;
                }
                for &id in &self.adj[u] {
                    let v = self.head[id];
                    if !reached[v] && self.cap[id] > 0 {
                        reached[v] = true;
                        via[v] = id;
                        queue.push_back(v);
                    }
                }
            }
            if !reached[sink] {
                return total;
            }
            let mut bottleneck = u64::MAX;
            let mut v = sink;
            while v != source {
                let id = via[v];
                bottleneck = bottleneck.min(self.cap[id]);
                v = self.head[id ^ 1];
            }
            let mut v = sink;
            while v != source {
                let id = via[v];
                self.cap[id] -= bottleneck;
                self.cap[id ^ 1] += bottleneck;
                v = self.head[id ^ 1];
            }
            total += bottleneck;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diamond_network() {
        let mut net = FlowNetwork::new(4);
        let a = net.add_arc(0, 1, 3);
        net.add_arc(0, 2, 2);
        net.add_arc(1, 2, 5);
        net.add_arc(1, 3, 2);
        let d = net.add_arc(2, 3, 3);
        assert_eq!(net.max_flow(0, 3), 5);
        assert_eq!(net.flow(a), 3);
        assert_eq!(net.flow(d), 3);
    }
}
