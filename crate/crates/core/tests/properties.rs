use proptest::prelude::*;
use vasskit_core::{
    path_effect, project_counters, Run, Semantics, Transition, Vass, ZConfiguration,
};

fn arb_vass() -> impl Strategy<Value = Vass> {
    (1usize..5, 1usize..5, 0usize..8).prop_flat_map(|(dim, n, m)| {
        let trans = proptest::collection::vec(
            (0..n, 0..n, proptest::collection::vec(-3i64..=3, dim)),
            m,
        );
        trans.prop_map(move |ts| {
            let mut v = Vass::new("p", dim);
            for i in 0..n {
                v.add_state(format!("q{i}"));
            }
            for (src, dst, eff) in ts {
                let effect = eff.into_iter().map(Into::into).collect();
                v.add_transition(src, effect, dst);
            }
            v
        })
    })
}

proptest! {
    /// parse(serialize(v)) = v.
    #[test]
    fn round_trip(v in arb_vass()) {
        let text = v.to_string();
        let back = Vass::parse(&text).unwrap();
        prop_assert_eq!(back, v);
    }

    /// A nonnegative-semantics run replayed under integer semantics yields
    /// an identical trace.
    #[test]
    fn nat_runs_replay_identically_under_z(v in arb_vass(), len in 0usize..12) {
        // Greedily walk whatever transitions are enabled.
        let start = ZConfiguration::new(0, vec![num_bigint::BigInt::from(2); v.dim]);
        let mut steps = Vec::new();
        let mut cur = start.to_nat().unwrap();
        'outer: for _ in 0..len {
            for t in v.outgoing(cur.state) {
                if let Ok(next) = vasskit_core::step(&v, &cur, t) {
                    steps.push(t);
                    cur = next;
                    continue 'outer;
                }
            }
            break;
        }
        let nat = Run::replay(&v, &start, &steps, Semantics::Nonnegative).unwrap();
        let z = Run::replay(&v, &start, &steps, Semantics::Integer).unwrap();
        prop_assert_eq!(nat.trace, z.trace);
    }

    /// Stepping forward then applying the negated effect returns to the
    /// original values (integer semantics).
    #[test]
    fn reverse_effect_is_identity(v in arb_vass()) {
        for (i, t) in v.transitions.iter().enumerate() {
            let start = ZConfiguration::new(t.src, vec![num_bigint::BigInt::from(0); v.dim]);
            let mid = vasskit_core::step_z(&v, &start, i).unwrap();
            let mut rev = v.clone();
            let neg: Vec<num_bigint::BigInt> = t.effect.iter().map(|e| -e).collect();
            let back_idx = rev.transitions.len();
            rev.transitions.push(Transition { src: t.dst, dst: t.src, effect: neg });
            let back = vasskit_core::step_z(&rev, &mid, back_idx).unwrap();
            prop_assert_eq!(back.values, start.values);
        }
    }

    /// Projection onto all coordinates is the identity, and effects of a
    /// projected path are the projected path effect.
    #[test]
    fn projection_commutes_with_path_effect(v in arb_vass()) {
        let all: Vec<usize> = (0..v.dim).collect();
        prop_assert_eq!(&project_counters(&v, &all).unwrap(), &v);
        if v.dim > 1 && !v.transitions.is_empty() {
            let keep = vec![0usize];
            let p = project_counters(&v, &keep).unwrap();
            // Any single transition is a path.
            for t in 0..v.transitions.len() {
                let full = path_effect(&v, &[t]).unwrap();
                let proj = path_effect(&p, &[t]).unwrap();
                prop_assert_eq!(proj, vec![full[0].clone()]);
            }
        }
    }
}
