use crate::model::{StateId, Vass};

/// Strongly connected components of the state graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SccDecomposition {
    /// Components in a topological order of the condensation; every
    /// transition goes from its source's component to an equal or later one.
    /// States inside a component are listed in ascending order.
    pub components: Vec<Vec<StateId>>,
    /// Component index per state.
    pub component_of: Vec<usize>,
    /// Transition indices whose endpoints lie in distinct components.
    pub bridges: Vec<usize>,
    /// True when the condensation is a simple path with exactly one bridge
    /// between each pair of consecutive components.
    pub is_line: bool,
}

struct TarjanState {
    index: Vec<Option<usize>>,
    lowlink: Vec<usize>,
    on_stack: Vec<bool>,
    stack: Vec<StateId>,
    next_index: usize,
    components: Vec<Vec<StateId>>,
}

/// Iterative Tarjan; components come out in reverse topological order and
/// are flipped before returning.
pub fn scc_decompose(vass: &Vass) -> SccDecomposition {
    let n = vass.states.len();
    let succ: Vec<Vec<StateId>> = {
        let mut succ = vec![Vec::new(); n];
        for t in &vass.transitions {
            succ[t.src].push(t.dst);
        }
        succ
    };

    let mut st = TarjanState {
        index: vec![None; n],
        lowlink: vec![0; n],
        on_stack: vec![false; n],
        stack: Vec::new(),
        next_index: 0,
        components: Vec::new(),
    };

    for root in 0..n {
        if st.index[root].is_some() {
            continue;
        }
        // Explicit DFS frames: (state, next successor position).
        let mut frames: Vec<(StateId, usize)> = vec![(root, 0)];
        st.index[root] = Some(st.next_index);
        st.lowlink[root] = st.next_index;
        st.next_index += 1;
        st.stack.push(root);
        st.on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = frames.last_mut() {
            if *pos < succ[v].len() {
                let w = succ[v][*pos];
                *pos += 1;
                match st.index[w] {
                    None => {
                        st.index[w] = Some(st.next_index);
                        st.lowlink[w] = st.next_index;
                        st.next_index += 1;
                        st.stack.push(w);
                        st.on_stack[w] = true;
                        frames.push((w, 0));
                    }
                    Some(wi) => {
                        if st.on_stack[w] && wi < st.lowlink[v] {
                            st.lowlink[v] = wi;
                        }
                    }
                }
            } else {
                frames.pop();
                if let Some(&mut (parent, _)) = frames.last_mut() {
                    if st.lowlink[v] < st.lowlink[parent] {
                        st.lowlink[parent] = st.lowlink[v];
                    }
                }
                if st.lowlink[v] == st.index[v].unwrap() {
                    // Root of an SCC: pop the stack down to v.
                    let mut comp = Vec::new();
                    loop {
                        let w = st.stack.pop().expect("tarjan stack underflow");
                        st.on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    st.components.push(comp);
                }
            }
        }
    }

    st.components.reverse();
    let mut component_of = vec![0; n];
    for (ci, comp) in st.components.iter().enumerate() {
        for &s in comp {
            component_of[s] = ci;
        }
    }

    let bridges: Vec<usize> = vass
        .transitions
        .iter()
        .enumerate()
        .filter(|(_, t)| component_of[t.src] != component_of[t.dst])
        .map(|(i, _)| i)
        .collect();

    let k = st.components.len();
    let is_line = {
        let mut counts = vec![0usize; k.saturating_sub(1)];
        let mut ok = true;
        for &b in &bridges {
            let t = &vass.transitions[b];
            let (a, c) = (component_of[t.src], component_of[t.dst]);
            if c == a + 1 {
                counts[a] += 1;
            } else {
                ok = false;
                break;
            }
        }
        ok && counts.iter().all(|&c| c == 1)
    };

    SccDecomposition {
        components: st.components,
        component_of,
        bridges,
        is_line,
    }
}
