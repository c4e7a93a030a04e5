use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use vasskit_core::Vass;
use vasskit_geometry::geometric_dimension;

/// Parameters feeding the run-length recurrences.
#[derive(Debug, Clone)]
pub struct BoundParams {
    /// Number of counters.
    pub d: usize,
    /// Number of states.
    pub n: usize,
    /// Largest absolute transition-effect entry.
    pub m: BigInt,
    /// Geometric dimension of the system.
    pub g: usize,
    /// Max-norm of the covering target (0 when not covering).
    pub target_norm: BigInt,
    /// Uniform covering threshold (0 when not uniform-covering).
    pub uniform_target: BigInt,
}

impl BoundParams {
    pub fn new(d: usize, n: usize, m: impl Into<BigInt>, g: usize) -> Self {
        let m = m.into();
        assert!(n >= 1, "need at least one state");
        assert!(g <= d, "geometric dimension cannot exceed the counter count");
        assert!(!m.is_negative(), "the effect norm is an absolute value");
        BoundParams {
            d,
            n,
            m,
            g,
            target_norm: BigInt::zero(),
            uniform_target: BigInt::zero(),
        }
    }

    /// Reads `d`, `n`, `M`, and the geometric dimension off a system.
    pub fn of_instance(vass: &Vass) -> Self {
        BoundParams::new(
            vass.dim,
            vass.states.len(),
            vass.max_norm(),
            geometric_dimension(vass),
        )
    }

    pub fn with_target_norm(mut self, norm: impl Into<BigInt>) -> Self {
        self.target_norm = norm.into();
        assert!(!self.target_norm.is_negative());
        self
    }

    pub fn with_uniform_target(mut self, threshold: impl Into<BigInt>) -> Self {
        self.uniform_target = threshold.into();
        assert!(!self.uniform_target.is_negative());
        self
    }
}

/// Every recurrence the deciders rely on, evaluated up to index `g`.
///
/// Values are exact until they would exceed `ceiling`, after which they are
/// clamped to `ceiling`. The sequences are doubly exponential, so the exact
/// values quickly stop fitting in memory; a clamped entry still dominates
/// any depth a search could visit in practice, and the deciders report a
/// cap-limited outcome separately from a certified one, so clamping never
/// turns an honest answer into a wrong one.
#[derive(Debug, Clone)]
pub struct BoundTable {
    pub params: BoundParams,
    pub ceiling: BigInt,
    /// Coverability run-length bounds, indexed by restricted dimension.
    pub cover_l: Vec<BigInt>,
    /// Sharper product-form coverability bounds.
    pub cover_k: Vec<BigInt>,
    /// Largeness thresholds of the uniform-covering argument.
    pub uniform_c: Vec<BigInt>,
    /// High-water marks every counter must reach for the pumping premise.
    pub uniform_h: Vec<BigInt>,
    /// Uniform-covering run-length bounds.
    pub uniform_l: Vec<BigInt>,
    /// Seed constant `(5·d²·n²·M)²` of the self-covering recurrence.
    pub selfcover_d: BigInt,
    /// Self-covering (unboundedness witness) run-length bounds.
    pub selfcover_l: Vec<BigInt>,
    /// `A^((g+1)^(g+1))` with `A = 4ndM(∥y∥+1)`; dominates `cover_l[g]`
    /// whenever `M ≥ 1`.
    pub cover_l_closed: BigInt,
    /// `A^(2^(g+1)−1)`, same `A`; dominates `cover_k[g]` whenever `M ≥ 1`.
    pub cover_k_closed: BigInt,
    /// `B^((g+1)^(g+1))` with `B = 2n(d+1)M(G+1)`; dominates
    /// `uniform_l[g]` and `uniform_h[g]` whenever `M ≥ 1`.
    pub uniform_closed: BigInt,
    /// `C^((4g+2)^(2g+1))` with `C = 2·selfcover_d·d·M`; dominates
    /// `selfcover_l[g]` whenever `M ≥ 1`.
    pub selfcover_closed: BigInt,
}

impl BoundTable {
    /// Default coverability cap: the smaller of the two bound families.
    pub fn cover_cap(&self) -> BigInt {
        let l = &self.cover_l[self.params.g];
        let k = &self.cover_k[self.params.g];
        if l <= k { l.clone() } else { k.clone() }
    }

    pub fn uniform_cap(&self) -> &BigInt {
        &self.uniform_l[self.params.g]
    }

    pub fn selfcover_cap(&self) -> &BigInt {
        &self.selfcover_l[self.params.g]
    }

    /// True when `value` hit the ceiling, i.e. is a clamped stand-in for a
    /// larger exact number.
    pub fn is_clamped(&self, value: &BigInt) -> bool {
        value >= &self.ceiling
    }
}

pub const DEFAULT_CEILING_BITS: u64 = 16_384;

fn cadd(a: &BigInt, b: &BigInt, ceil: &BigInt) -> BigInt {
    let s = a + b;
    if s > *ceil { ceil.clone() } else { s }
}

fn cmul(a: &BigInt, b: &BigInt, ceil: &BigInt) -> BigInt {
    let p = a * b;
    if p > *ceil { ceil.clone() } else { p }
}

/// Square-and-multiply with clamping; exact below the ceiling because
/// min(·, ceiling) commutes with the monotone nonnegative operations.
fn cpow(base: &BigInt, exp: &BigInt, ceil: &BigInt) -> BigInt {
    debug_assert!(!exp.is_negative());
    let mut result = BigInt::one();
    for bit in (0..exp.bits()).rev() {
        result = cmul(&result, &result, ceil);
        if !((exp >> bit) & BigInt::one()).is_zero() {
            result = cmul(&result, base, ceil);
        }
    }
    result
}

/// Exact `base^exp` for small exponents.
fn upow(base: usize, exp: usize) -> BigInt {
    let mut result = BigInt::one();
    for _ in 0..exp {
        result *= base;
    }
    result
}

pub fn bounds(params: &BoundParams) -> BoundTable {
    bounds_with_ceiling(params, DEFAULT_CEILING_BITS)
}

pub fn bounds_with_ceiling(params: &BoundParams, ceiling_bits: u64) -> BoundTable {
    let ceil = BigInt::one() << ceiling_bits;
    let g = params.g;
    let d = BigInt::from(params.d);
    let n = BigInt::from(params.n);
    let m = &params.m;
    let y = &params.target_norm;
    let big_g = &params.uniform_target;

    // Coverability: L_0 = n−1, L_i = n·(d·(∥y∥ + M·L_{i−1}))^i + L_{i−1}.
    let mut cover_l = vec![&n - 1];
    for i in 1..=g {
        let prev = &cover_l[i - 1];
        let inner = cadd(y, &cmul(m, prev, &ceil), &ceil);
        let pow = cpow(&cmul(&d, &inner, &ceil), &BigInt::from(i), &ceil);
        cover_l.push(cadd(&cmul(&n, &pow, &ceil), prev, &ceil));
    }

    // Product form: K_0 = n−1, K_i = n·d^i·Π_{j<i}(∥y∥ + M·K_j) + K_{i−1}.
    let mut cover_k: Vec<BigInt> = vec![&n - 1];
    let mut product = BigInt::one();
    for i in 1..=g {
        let prev = cover_k[i - 1].clone();
        product = cmul(&product, &cadd(y, &cmul(m, &prev, &ceil), &ceil), &ceil);
        let dpow = cpow(&d, &BigInt::from(i), &ceil);
        let term = cmul(&cmul(&n, &dpow, &ceil), &product, &ceil);
        cover_k.push(cadd(&term, &prev, &ceil));
    }

    // Uniform covering: C_0 = 0, C_i = M·L_{i−1} + G;
    // H_0 = n(d+1)M + G, H_i = nM(dC_i)^i + H_{i−1};
    // L_0 = n(d+1), L_i = n(dC_i)^i + L_{i−1}.
    let nd1 = cmul(&n, &(&d + 1), &ceil);
    let mut uniform_c = vec![BigInt::zero()];
    let mut uniform_h = vec![cadd(&cmul(&nd1, m, &ceil), big_g, &ceil)];
    let mut uniform_l = vec![nd1];
    for i in 1..=g {
        let c_i = cadd(&cmul(m, &uniform_l[i - 1], &ceil), big_g, &ceil);
        let pow = cpow(&cmul(&d, &c_i, &ceil), &BigInt::from(i), &ceil);
        uniform_h.push(cadd(
            &cmul(&cmul(&n, m, &ceil), &pow, &ceil),
            &uniform_h[i - 1],
            &ceil,
        ));
        uniform_l.push(cadd(&cmul(&n, &pow, &ceil), &uniform_l[i - 1], &ceil));
        uniform_c.push(c_i);
    }

    // Self-covering: D = (5d²n²M)², L_0 = D^{g+1},
    // L_i = (D·(dML_{i−1})^{4i})^{g+1} + L_{i−1}.
    let seed = BigInt::from(5) * &d * &d * &n * &n * m;
    let selfcover_d = cmul(&seed, &seed, &ceil);
    let g1 = BigInt::from(g + 1);
    let mut selfcover_l = vec![cpow(&selfcover_d, &g1, &ceil)];
    for i in 1..=g {
        let prev = &selfcover_l[i - 1];
        let dm = cmul(&cmul(&d, m, &ceil), prev, &ceil);
        let inner = cmul(&selfcover_d, &cpow(&dm, &BigInt::from(4 * i), &ceil), &ceil);
        selfcover_l.push(cadd(&cpow(&inner, &g1, &ceil), prev, &ceil));
    }

    // Closed forms from the proofs; degenerate (zero) when M = 0.
    let f_g = upow(g + 1, g + 1);
    let h_g = upow(2, g + 1) - 1;
    let a = BigInt::from(4) * &n * &d * m * (y + 1);
    let cover_l_closed = cpow(&a, &f_g, &ceil);
    let cover_k_closed = cpow(&a, &h_g, &ceil);
    let b = BigInt::from(2) * &n * (&d + 1) * m * (big_g + 1);
    let uniform_closed = cpow(&b, &f_g, &ceil);
    let c = BigInt::from(2) * &selfcover_d * &d * m;
    let selfcover_closed = cpow(&c, &upow(4 * g + 2, 2 * g + 1), &ceil);

    BoundTable {
        params: params.clone(),
        ceiling: ceil,
        cover_l,
        cover_k,
        uniform_c,
        uniform_h,
        uniform_l,
        selfcover_d,
        selfcover_l,
        cover_l_closed,
        cover_k_closed,
        uniform_closed,
        selfcover_closed,
    }
}

/// Length bound for integer-semantics reachability runs: `base^(6g+1)`,
/// where `base` is the larger of the system size and the endpoint norms.
pub fn zrun_length_bound(base: &BigInt, g: usize) -> BigInt {
    let mut result = BigInt::one();
    for _ in 0..(6 * g + 1) {
        result *= base;
    }
    result
}
