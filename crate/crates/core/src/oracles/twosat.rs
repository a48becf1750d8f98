/// 2-SAT over boolean variables `0..n`, decided by strongly connected
/// components of the implication graph.
#[derive(Clone, Debug)]
pub struct TwoSat {
    n: usize,
    implications: Vec<Vec<usize>>,
}

impl TwoSat {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            implications: vec![Vec::new(); 2 * n],
        }
    }

    // node 2v is "v true", 2v+1 is "v false"
    fn node(var: usize, value: bool) -> usize {
        2 * var + usize::from(!value)
    }

    /// Adds the clause `(a == va) ∨ (b == vb)`.
    pub fn add_clause(&mut self, a: usize, va: bool, b: usize, vb: bool) {
        self.implications[Self::node(a, !va)].push(Self::node(b, vb));
        self.implications[Self::node(b, !vb)].push(Self::node(a, va));
    }

    /// Forces `a == va`.
    pub fn add_unit(&mut self, a: usize, va: bool) {
        self.add_clause(a, va, a, va);
    }

    /// A satisfying assignment, if any.
    pub fn solve(&self) -> Option<Vec<bool>> {
        let comp = self.components();
        let mut out = Vec::with_capacity(self.n);
        for v in 0..self.n {
            let (t, f) = (comp[2 * v], comp[2 * v + 1]);
            if t == f {
                return None;
            }
            // Tarjan numbers components in reverse topological order
            out.push(t < f);
        }
        Some(out)
    }

    /// Iterative Tarjan; component ids come out in reverse topological order.
    fn components(&self) -> Vec<usize> {
        let n = self.implications.len();
        const UNSEEN: usize = usize::MAX;
        let mut index = vec![UNSEEN; n];
        let mut low = vec![0; n];
        let mut on_stack = vec![false; n];
        let mut comp = vec![UNSEEN; n];
        let mut stack = Vec::new();
        let mut call: Vec<(usize, usize)> = Vec::new();
        let mut next_index = 0;
        let mut next_comp = 0;
        for root in 0..n {
            if index[root] != UNSEEN {
                continue;
            }
            call.push((root, 0));
            index[root] = next_index;
            low[root] = next_index;
            next_index += 1;
            stack.push(root);
            on_stack[root] = true;
            while let Some(&mut (v, ref mut edge)) = call.last_mut() {
                if let Some(&w) = self.implications[v].get(*edge) {
                    *edge += 1;
                    if index[w] == UNSEEN {
                        index[w] = next_index;
                        low[w] = next_index;
                        next_index += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        call.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                } else {
                    call.pop();
                    if let Some(&(parent, _)) = call.last() {
                        low[parent] = low[parent].min(low[v]);
                    }
                    if low[v] == index[v] {
                        loop {
                            let w = stack.pop().unwrap();
                            on_stack[w] = false;
                            comp[w] = next_comp;
                            if w == v {
                                break;
                            }
                        }
                        next_comp += 1;
                    }
                }
            }
        }
        comp
    }
}
