use mdcodes::cyclic::{codes_equal, CodeSpan};
use mdcodes::multidim::{
    evaluation_image, idempotents, is_separable, method1_from_levels, method1_ideals, method1_generators,
    method2_generators, nd_generators, Method, NdOptions,
};
use mdcodes::oracle::{enumerate_span, literal_cj, literal_evaluation, literal_ij, DEFAULT_BUDGET};
use mdcodes::text::{parse_list, parse_poly};
use mdcodes::{ChainRing, Elem, MultiPoly, Ring};
use proptest::prelude::*;

/// Largest code the oracle is asked to enumerate.
const MAX_LOG2_SIZE: f64 = 16.0;

fn ring(text: &str) -> Ring {
    ChainRing::parse(text).unwrap()
}

/// `g^a * u * (x_1 - 1)^{s_1} * ..`: the binomial factors keep codes small enough
/// to enumerate while still exercising every level structure.
#[derive(Clone, Debug)]
struct GenSpec {
    coeffs: Vec<u32>,
    gamma: u32,
    powers: Vec<usize>,
}

fn gen_spec(len: usize, k: usize) -> impl Strategy<Value = GenSpec> {
    (prop::collection::vec(0u32..4096, len), 0u32..3, prop::collection::vec(0usize..4, k))
        .prop_map(|(coeffs, gamma, powers)| GenSpec { coeffs, gamma, powers })
}

fn build(r: &Ring, dims: &[usize], spec: &GenSpec) -> MultiPoly {
    let o = r.order() as u32;
    let coeffs = spec.coeffs.iter().map(|&c| Elem(c % o)).collect();
    let mut f = MultiPoly::from_flat(r, dims.to_vec(), coeffs).unwrap().scale(r.gamma_pow(spec.gamma % r.nu()));
    for (v, &s) in spec.powers.iter().enumerate() {
        let lin = MultiPoly::variable(r, dims, v).sub(&MultiPoly::one(r, dims)).unwrap();
        f = f.mul(&lin.pow(s.min(dims[v] - 1) as u64)).unwrap();
    }
    f
}

fn small_enough(span: &CodeSpan) -> bool {
    span.log_q_size() as f64 * (span.ring().q() as f64).log2() <= MAX_LOG2_SIZE
}

fn instance(choices: Vec<(&'static str, Vec<usize>)>) -> impl Strategy<Value = (Ring, Vec<usize>, Vec<MultiPoly>)> {
    prop::sample::select(choices).prop_flat_map(|(text, dims)| {
        let len: usize = dims.iter().product();
        let k = dims.len();
        prop::collection::vec(gen_spec(len, k), 1..4).prop_map(move |specs| {
            let r = ring(text);
            let gens = specs.iter().map(|s| build(&r, &dims, s)).collect();
            (r, dims.clone(), gens)
        })
    })
}

fn method1_choices() -> Vec<(&'static str, Vec<usize>)> {
    let mut out = Vec::new();
    for text in ["Z/4", "Z/9", "F4[g]/(g^2)"] {
        for dims in [[2, 2], [2, 3], [3, 2], [4, 2], [2, 4], [4, 4], [3, 3], [4, 3], [1, 3], [5, 3]] {
            if dims[0] * dims[1] <= 16 {
                out.push((text, dims.to_vec()));
            }
        }
    }
    out
}

fn method2_choices() -> Vec<(&'static str, Vec<usize>)> {
    vec![
        ("Z/9", vec![2, 2]),
        ("Z/9", vec![3, 2]),
        ("Z/9", vec![4, 2]),
        ("F4[g]/(g^2)", vec![2, 3]),
        ("F4[g]/(g^2)", vec![3, 3]),
        ("F4[g]/(g^2)", vec![4, 3]),
        ("Z/25", vec![2, 2]),
        ("Z/25", vec![2, 4]),
    ]
}

fn rejects() -> ProptestConfig {
    ProptestConfig { cases: 64, max_global_rejects: 100_000, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(rejects())]

    #[test]
    fn method1_regenerates_and_levels_are_literal((r, dims, gens) in instance(method1_choices())) {
        let span = CodeSpan::from_generators(&r, &dims, &gens).unwrap();
        prop_assume!(small_enough(&span));
        let report = method1_generators(&span).unwrap();
        prop_assert!(report.certification.is_certified(), "{}", report.certification);
        let code = enumerate_span(&r, &dims, &gens, DEFAULT_BUDGET).unwrap();
        let back = enumerate_span(&r, &dims, &report.polys(), DEFAULT_BUDGET).unwrap();
        prop_assert!(back.same_words(&code));

        let ideals = method1_ideals(&span).unwrap();
        let mut bound = 0;
        for (j, set) in ideals.iter().enumerate() {
            prop_assert!(set.check_staircase().is_ok());
            let level = enumerate_span(&r, &dims[..1], &set.generator_polys(), DEFAULT_BUDGET).unwrap();
            prop_assert_eq!(level.words(), &literal_ij(&code, j), "I_{} = {}", j, set);
            bound += set.len();
        }
        prop_assert_eq!(report.generators.len(), bound);
        for g in &report.generators {
            // witness shape: y-degree n - 1 - j with the staircase generator on top
            let j = match g.origin[0] { mdcodes::multidim::Step::Peel { j, .. } => j, _ => unreachable!() };
            let d = dims[1] - 1 - j;
            prop_assert_eq!(g.poly.last_degree(), Some(d));
            prop_assert_eq!(&g.poly.slice_last(d), &ideals[j].generator_polys()[g.leaf_index]);
        }
    }

    #[test]
    fn transpose_consistency((r, dims, gens) in instance(method1_choices())) {
        let span = CodeSpan::from_generators(&r, &dims, &gens).unwrap();
        prop_assume!(small_enough(&span));
        let t = span.transpose();
        let report = method1_generators(&t).unwrap();
        prop_assert!(report.certification.is_certified());
        let back = CodeSpan::from_generators(&r, t.dims(), &report.polys()).unwrap();
        prop_assert!(codes_equal(&back, &t).unwrap());
        prop_assert!(codes_equal(&back.transpose(), &span).unwrap());
        // the transpose route of the nD driver lands on the same code
        let opts = NdOptions { transpose: true, method: mdcodes::multidim::Route::Method1, ..NdOptions::default() };
        let via = nd_generators(&r, &dims, &gens, &opts).unwrap();
        prop_assert!(via.certification.is_certified());
    }

    #[test]
    fn method2_agrees_with_method1_and_literal_levels((r, dims, gens) in instance(method2_choices())) {
        let span = CodeSpan::from_generators(&r, &dims, &gens).unwrap();
        prop_assume!(small_enough(&span));
        let two = method2_generators(&span).unwrap();
        let one = method1_generators(&span).unwrap();
        prop_assert_eq!(two.method, Method::Method2);
        prop_assert!(two.certification.is_certified());
        prop_assert!(two.generators.iter().all(|g| g.separable && is_separable(&g.poly)));
        two.check_forms().unwrap();
        let s1 = CodeSpan::from_generators(&r, &dims, &one.polys()).unwrap();
        let s2 = CodeSpan::from_generators(&r, &dims, &two.polys()).unwrap();
        prop_assert!(codes_equal(&s1, &s2).unwrap() && codes_equal(&s2, &span).unwrap());

        let code = enumerate_span(&r, &dims, &gens, DEFAULT_BUDGET).unwrap();
        let back = enumerate_span(&r, &dims, &two.polys(), DEFAULT_BUDGET).unwrap();
        prop_assert!(back.same_words(&code));
        let fam = idempotents(&r, dims[1]).unwrap();
        for j in 0..dims[1] {
            let z = fam.zeta_pow(j);
            let image = evaluation_image(&span, z).unwrap();
            let image_words = enumerate_span(&r, &dims[..1], &image.rows(), DEFAULT_BUDGET).unwrap();
            let cj = literal_cj(&code, fam.theta(j), DEFAULT_BUDGET).unwrap();
            prop_assert_eq!(image_words.words(), &cj, "C_{}", j);
            prop_assert_eq!(&literal_evaluation(&code, z), &cj);
        }
    }

    #[test]
    fn three_variables_regenerate((r, dims, gens) in instance(vec![("Z/9", vec![2, 2, 2]), ("Z/9", vec![3, 2, 2])])) {
        let span = CodeSpan::from_generators(&r, &dims, &gens).unwrap();
        prop_assume!(small_enough(&span));
        let report = nd_generators(&r, &dims, &gens, &NdOptions::default()).unwrap();
        prop_assert!(report.certification.is_certified());
        prop_assert_eq!(report.method, Method::Method2);
        report.check_forms().unwrap();
        for g in &report.generators {
            prop_assert_eq!(&g.form.core_vars, &vec![0]);
            let vars: Vec<usize> = g.form.factors.iter().map(|f| f.0).collect();
            prop_assert_eq!(vars, vec![1, 2]);
            prop_assert!(g.separable);
        }
        let code = enumerate_span(&r, &dims, &gens, DEFAULT_BUDGET).unwrap();
        let back = enumerate_span(&r, &dims, &report.polys(), DEFAULT_BUDGET).unwrap();
        prop_assert!(back.same_words(&code));
    }

    #[test]
    fn evaluation_is_a_homomorphism(
        a in prop::collection::vec(0u32..9, 6),
        b in prop::collection::vec(0u32..9, 6),
        j in 0usize..2,
    ) {
        let r = ring("Z/9");
        let mk = |c: &[u32]| MultiPoly::from_flat(&r, vec![3, 2], c.iter().map(|&x| Elem(x)).collect()).unwrap();
        let (f, g) = (mk(&a), mk(&b));
        let z = idempotents(&r, 2).unwrap().zeta_pow(j);
        let lhs = f.mul(&g).unwrap().evaluate_y(z).unwrap();
        let rhs = f.evaluate_y(z).unwrap().mul_mod(&g.evaluate_y(z).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        let sum = f.add(&g).unwrap().evaluate_y(z).unwrap();
        prop_assert_eq!(sum, f.evaluate_y(z).unwrap().add(&g.evaluate_y(z).unwrap()).unwrap());
        prop_assert_eq!(f.mul(&g).unwrap().transpose(), f.transpose().mul(&g.transpose()).unwrap());
    }
}

#[test]
fn idempotent_grid() {
    let grid: &[(&str, &[usize])] = &[
        ("Z/9", &[2]),
        ("Z/25", &[2, 4]),
        ("F4[g]/(g^2)", &[3]),
        ("F13[g]/(g^2)", &[2, 3, 4, 6, 12]),
        ("F17[g]/(g^2)", &[4]),
    ];
    for (text, ns) in grid {
        let r = ring(text);
        for &n in *ns {
            let fam = idempotents(&r, n).unwrap_or_else(|e| panic!("{text}, n = {n}: {e}"));
            fam.verify().unwrap();
            assert_eq!(fam.thetas().len(), n);
        }
    }
}

#[test]
fn theta_code_levels() {
    // C = <theta_0> over (Z/9, m = 1, n = 2)
    let r = ring("Z/9");
    let fam = idempotents(&r, 2).unwrap();
    let gens = vec![MultiPoly::from_univariate(fam.theta(0), &[1, 2], 1).unwrap()];
    let span = CodeSpan::from_generators(&r, &[1, 2], &gens).unwrap();
    let report = method2_generators(&span).unwrap();
    assert_eq!(report.polys(), gens);
    assert_eq!(report.levels[0].set.to_string(), "gamma^0 * (1)");
    assert_eq!(report.levels[1].set.to_string(), "zero code");
    let code = enumerate_span(&r, &[1, 2], &gens, DEFAULT_BUDGET).unwrap();
    assert_eq!(literal_cj(&code, fam.theta(0), DEFAULT_BUDGET).unwrap().len(), 9);
    assert_eq!(literal_cj(&code, fam.theta(1), DEFAULT_BUDGET).unwrap().len(), 1);
}

#[test]
fn separable_generator_regenerates() {
    let r = ring("F4[g]/(g^2)");
    let gens = parse_list(&r, &[4, 3], "(x^2 + 1)*(y + a)").unwrap();
    let span = CodeSpan::from_generators(&r, &[4, 3], &gens).unwrap();
    let report = method1_generators(&span).unwrap();
    assert!(report.certification.is_certified());
    let code = enumerate_span(&r, &[4, 3], &gens, DEFAULT_BUDGET).unwrap();
    let back = enumerate_span(&r, &[4, 3], &report.polys(), DEFAULT_BUDGET).unwrap();
    assert!(back.same_words(&code));
}

#[test]
fn scaled_down_example_one() {
    // levels I_0 = <g(x-1), (x-1)^2>, I_1 = <g(x-1)^2>, I_2 = <(x-1)^3> over m = 4, n = 3
    let r = ring("F4[g]/(g^2)");
    let dims = [4, 3];
    let p = |t: &str| parse_poly(&r, &dims, t).unwrap();
    let levels = vec![
        vec![p("g*(x + 1)*y^2"), p("(x + 1)^2*y^2")],
        vec![p("g*(x + 1)^2*y")],
        vec![p("(x + 1)^3")],
    ];
    let supplied = method1_from_levels(&r, 4, 3, &levels, true).unwrap();
    assert_eq!(supplied.generators.len(), 4);
    let tops: Vec<usize> = supplied.levels.iter().map(|l| l.set.len()).collect();
    assert_eq!(tops, vec![2, 1, 1]);

    // the code they generate, handed to the peeling construction
    let span = CodeSpan::from_generators(&r, &dims, &supplied.polys()).unwrap();
    let report = method1_generators(&span).unwrap();
    assert!(report.certification.is_certified());
    let ideals = method1_ideals(&span).unwrap();
    let total: usize = ideals.iter().map(|s| s.len()).sum();
    assert_eq!(report.generators.len(), total);
    for set in &ideals {
        set.check_staircase().unwrap();
        assert!(set.len() <= r.nu() as usize);
    }
    // nested levels: I_{j+1} is inside I_j
    for w in ideals.windows(2) {
        assert!(w[1].to_span().is_subcode_of(&w[0].to_span()));
    }
    // I_2 = <(x-1)^3> is not inside I_1 = <g (x-1)^2>, so the supplied levels
    // cannot all be the level ideals of one code
    assert!(!supplied.certification.is_certified());
}
