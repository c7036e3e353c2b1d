use std::sync::OnceLock;

use mdcodes::ring::{find_primitive_root, has_order, hensel_lift_root};
use mdcodes::text::parse_poly;
use mdcodes::{ChainRing, Elem, MultiPoly, Poly, Ring};
use proptest::prelude::*;

const RINGS: &[&str] = &["Z/4", "Z/8", "Z/9", "Z/25", "Z/27", "F4[g]/(g^2)", "F8[g]/(g^3)", "F9[g]/(g^2)", "F13[g]/(g^2)"];

fn rings() -> &'static [Ring] {
    static CACHE: OnceLock<Vec<Ring>> = OnceLock::new();
    CACHE.get_or_init(|| RINGS.iter().map(|t| ChainRing::parse(t).unwrap()).collect())
}

fn ring_and_elems(count: usize) -> impl Strategy<Value = (Ring, Vec<Elem>)> {
    prop::sample::select(rings()).prop_flat_map(move |r| {
        let o = r.order() as u32;
        prop::collection::vec(0..o, count).prop_map(move |v| (r.clone(), v.into_iter().map(Elem).collect()))
    })
}

proptest! {
    #[test]
    fn commutative_ring_axioms((r, e) in ring_and_elems(3)) {
        let (a, b, c) = (e[0], e[1], e[2]);
        prop_assert_eq!(r.add(a, b), r.add(b, a));
        prop_assert_eq!(r.mul(a, b), r.mul(b, a));
        prop_assert_eq!(r.add(r.add(a, b), c), r.add(a, r.add(b, c)));
        prop_assert_eq!(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c)));
        prop_assert_eq!(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c)));
        prop_assert_eq!(r.add(a, r.neg(a)), r.zero());
        prop_assert_eq!(r.mul(a, r.one()), a);
        prop_assert_eq!(r.sub(a, b), r.add(a, r.neg(b)));
    }

    #[test]
    fn chain_structure((r, e) in ring_and_elems(2)) {
        let (a, b) = (e[0], e[1]);
        let nu = r.nu();
        prop_assert_eq!(r.valuation(r.mul(a, b)), (r.valuation(a) + r.valuation(b)).min(nu));
        prop_assert_eq!(r.is_unit(a), r.valuation(a) == 0);
        match r.inverse(a) {
            Some(inv) => prop_assert_eq!(r.mul(a, inv), r.one()),
            None => prop_assert!(!r.is_unit(a)),
        }
        for v in 0..=nu {
            let (q, rem) = r.div_rem_gamma_pow(a, v);
            prop_assert_eq!(r.add(r.mul_gamma_pow(q, v), rem), a);
            prop_assert_eq!(r.reduce_mod_gamma_pow(a, v), rem);
            prop_assert_eq!(r.mul_gamma_pow(a, v), r.mul(a, r.gamma_pow(v)));
        }
        // every element is a unit times a power of gamma
        if a != r.zero() {
            let v = r.valuation(a);
            let u = r.div_rem_gamma_pow(a, v).0;
            prop_assert!(r.is_unit(u));
        }
    }

    #[test]
    fn polynomial_ring_laws((r, e) in ring_and_elems(12)) {
        let f = Poly::new(&r, e[..4].to_vec());
        let g = Poly::new(&r, e[4..8].to_vec());
        let h = Poly::new(&r, e[8..].to_vec());
        prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
        prop_assert_eq!(f.mul(&g.add(&h).unwrap()).unwrap(), f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap());
        let at = e[0];
        prop_assert_eq!(f.mul(&g).unwrap().eval(at), r.mul(f.eval(at), g.eval(at)));
    }

    #[test]
    fn printed_multivariate_forms_reparse((r, e) in ring_and_elems(12), shape in 0usize..3) {
        let dims = [vec![12], vec![4, 3], vec![2, 3, 2]][shape].clone();
        let f = MultiPoly::from_flat(&r, dims.clone(), e).unwrap();
        let back = parse_poly(&r, &dims, &f.to_string()).unwrap();
        prop_assert_eq!(back, f);
    }
}

#[test]
fn roots_of_unity_and_lifts() {
    for (text, r) in RINGS.iter().zip(rings()) {
        let qm1 = (r.q() - 1) as usize;
        for n in (1..=qm1).filter(|n| qm1.is_multiple_of(*n)) {
            let z = find_primitive_root(r, n).unwrap();
            assert!(has_order(r, z, n), "{text}: n = {n}");
            assert_eq!(hensel_lift_root(r, n, r.residue(z)).unwrap(), z, "{text}: lift is unique");
        }
    }
}
