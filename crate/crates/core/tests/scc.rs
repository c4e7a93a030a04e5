use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vasskit_core::gen::{random_line_vass, random_vass};
use vasskit_core::{scc_decompose, Vass};

#[test]
fn single_state_self_loop_is_one_component_line() {
    let v = Vass::parse("vass t\ndim 1\nstate q\ntrans q q 1").unwrap();
    let scc = scc_decompose(&v);
    assert_eq!(scc.components, vec![vec![0]]);
    assert!(scc.bridges.is_empty());
    assert!(scc.is_line);
}

#[test]
fn two_components_one_bridge_is_line() {
    let v = Vass::parse(
        "vass t\ndim 1\nstate a b\ntrans a a 1\ntrans b b 1\ntrans a b 0",
    )
    .unwrap();
    let scc = scc_decompose(&v);
    assert_eq!(scc.components.len(), 2);
    assert_eq!(scc.bridges, vec![2]);
    assert!(scc.is_line);
    // Topological: `a`'s component first.
    assert_eq!(scc.components[0], vec![0]);
}

#[test]
fn mutual_reachability_merges_components() {
    let v = Vass::parse("vass t\ndim 1\nstate a b\ntrans a b 1\ntrans b a -1").unwrap();
    let scc = scc_decompose(&v);
    assert_eq!(scc.components, vec![vec![0, 1]]);
    assert!(scc.is_line);
}

#[test]
fn double_bridge_is_not_line() {
    let v = Vass::parse(
        "vass t\ndim 1\nstate a b\ntrans a a 0\ntrans b b 0\ntrans a b 0\ntrans a b 1",
    )
    .unwrap();
    let scc = scc_decompose(&v);
    assert_eq!(scc.components.len(), 2);
    assert_eq!(scc.bridges.len(), 2);
    assert!(!scc.is_line);
}

#[test]
fn skipping_bridge_is_not_line() {
    let v = Vass::parse(
        "vass t\ndim 1\nstate a b c\ntrans a b 0\ntrans b c 0\ntrans a c 0",
    )
    .unwrap();
    let scc = scc_decompose(&v);
    assert_eq!(scc.components.len(), 3);
    assert!(!scc.is_line);
}

#[test]
fn disconnected_components_are_not_line() {
    let v = Vass::parse("vass t\ndim 1\nstate a b\ntrans a a 0\ntrans b b 0").unwrap();
    let scc = scc_decompose(&v);
    assert_eq!(scc.components.len(), 2);
    assert!(!scc.is_line);
}

#[test]
fn random_decompositions_partition_and_respect_topology() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..200 {
        let v = random_vass(&mut rng, &format!("r{i}"), 2, 6, 9, 1);
        let scc = scc_decompose(&v);
        let mut seen = vec![0usize; v.states.len()];
        for comp in &scc.components {
            for &s in comp {
                seen[s] += 1;
            }
        }
        assert!(seen.iter().all(|&c| c == 1), "components must partition");
        for (s, &c) in scc.component_of.iter().enumerate() {
            assert!(scc.components[c].contains(&s));
        }
        for t in &v.transitions {
            assert!(
                scc.component_of[t.src] <= scc.component_of[t.dst],
                "condensation order must be topological"
            );
        }
        let n_bridges = scc.bridges.len();
        let n_intra = v
            .transitions
            .iter()
            .filter(|t| scc.component_of[t.src] == scc.component_of[t.dst])
            .count();
        assert_eq!(n_bridges + n_intra, v.transitions.len());
    }
}

#[test]
fn generated_lines_are_lines() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..100 {
        let blocks = [1 + (i % 3), 1 + (i % 2), 2];
        let v = random_line_vass(&mut rng, &format!("line{i}"), 2, &blocks, 2, 1);
        let scc = scc_decompose(&v);
        assert_eq!(scc.components.len(), blocks.len());
        assert!(scc.is_line, "constructed line must decompose as a line");
    }
}
