//! Named verification suites for `refacto verify`: each re-derives one of
//! the paper-level identities two independent ways at desk scale and
//! records pass/fail per check.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use refacto_core::characters::{
    char_poly_identity_check_table, char_poly_identity_check_wreath, embedded_table_names,
    exceptional_f, load_embedded,
};
use refacto_core::closed_forms::{
    all_weights_poly, b_gddn_nontrans, c_gd1n, c_gddn_trans, c_sn, chapuy_stump_counts,
    cycle_type_rhs, g25_poly, gd1n_poly, gddn_nontransitive_poly, gddn_transitive_poly,
    genus0_gd1n, genus0_gddn, rank2_poly, rank3_poly, zeta,
};
use refacto_core::coeffs::{m_coeff, m_coeff_by_subsets};
use refacto_core::noncross::{chains_by_rank_jumps, interval, IntervalOrder};
use refacto_core::oracle::{
    colored_count, count_by_weight0_type, count_by_weight_distribution,
    reflection_dp, weight0_counts_to_poly, weight_distribution_counts_to_poly, FactorQuery,
    Transitivity,
};
use refacto_core::wreath::GroupSpec;

#[derive(Serialize, Clone, Debug)]
pub struct CheckResult {
    pub suite: String,
    pub check: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

pub const SUITES: &[&str] = &[
    "recurrence-Ms",
    "lemma-3",
    "lemma-4-trans",
    "lemma-4-nontrans",
    "chapuy-stump",
    "genus0",
    "alt-nc",
    "cycle-type",
    "all-weights",
    "rank2",
    "rank3",
    "char-identities",
];

pub fn run_suite(name: &str) -> Option<Vec<CheckResult>> {
    let checks = match name {
        "recurrence-Ms" => recurrence_ms(),
        "lemma-3" => lemma_3(),
        "lemma-4-trans" => lemma_4(Transitivity::TransitiveOnly),
        "lemma-4-nontrans" => lemma_4(Transitivity::NontransitiveOnly),
        "chapuy-stump" => chapuy_stump(),
        "genus0" => genus0(),
        "alt-nc" => alt_nc(),
        "cycle-type" => cycle_type(),
        "all-weights" => all_weights(),
        "rank2" => rank2(),
        "rank3" => rank3(),
        "char-identities" => char_identities(),
        _ => return None,
    };
    Some(
        checks
            .into_iter()
            .map(|(check, pass, note)| CheckResult {
                suite: name.to_string(),
                check,
                pass,
                note,
            })
            .collect(),
    )
}

type Check = (String, bool, Option<String>);

fn p_vectors(k: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=max).map(move |p| {
                    let mut w = v.clone();
                    w.push(p);
                    w
                })
            })
            .collect();
    }
    out
}

fn recurrence_ms() -> Vec<Check> {
    let mut recurrence_ok = true;
    let mut subsets_ok = true;
    for n in 1..=5usize {
        for k in 1..=3usize {
            for p in p_vectors(k, n as i64) {
                let direct = m_coeff(n, &p);
                if direct != m_coeff_by_subsets(n, &p) {
                    subsets_ok = false;
                }
                let mut by_subsets = BigInt::zero();
                for mask in 0..(1u32 << k) - 1 {
                    let q: Vec<i64> = p
                        .iter()
                        .enumerate()
                        .map(|(i, &pi)| pi - ((mask >> i) & 1) as i64)
                        .collect();
                    by_subsets += m_coeff(n - 1, &q);
                }
                if direct != by_subsets {
                    recurrence_ok = false;
                }
            }
        }
    }
    vec![
        ("M recurrence, n <= 5, k <= 3".into(), recurrence_ok, None),
        ("M subset enumeration oracle".into(), subsets_ok, None),
    ]
}

const COLORED_INSTANCES: [(u32, usize); 3] = [(2, 2), (2, 3), (3, 2)];

fn lemma_3() -> Vec<Check> {
    let mut out = Vec::new();
    for (d, n) in COLORED_INSTANCES {
        let mut ok = true;
        for p in p_vectors(2, 2) {
            let pu: Vec<u32> = p.iter().map(|&x| x as u32).collect();
            let sym = FactorQuery::new(GroupSpec::sym(n), 2);
            if c_sn(n, &p) != colored_count(&sym, &pu).unwrap() {
                ok = false;
            }
            let q = FactorQuery::new(GroupSpec::g_d1n(d, n), 2);
            if c_gd1n(d, n, &p) != colored_count(&q, &pu).unwrap() {
                ok = false;
            }
        }
        out.push((format!("colored counts, G({d},1,{n}), p <= 2"), ok, None));
    }
    out
}

fn lemma_4(mode: Transitivity) -> Vec<Check> {
    let mut out = Vec::new();
    for (d, n) in COLORED_INSTANCES {
        let mut ok = true;
        for p in p_vectors(2, 2) {
            let pu: Vec<u32> = p.iter().map(|&x| x as u32).collect();
            let q = FactorQuery::new(GroupSpec::g_ddn(d, n), 2).with_transitivity(mode);
            let formula = match mode {
                Transitivity::TransitiveOnly => c_gddn_trans(d, n, &p),
                Transitivity::NontransitiveOnly => b_gddn_nontrans(d, n, &p),
                Transitivity::All => unreachable!(),
            };
            if formula != colored_count(&q, &pu).unwrap() {
                ok = false;
            }
        }
        let label = match mode {
            Transitivity::TransitiveOnly => "transitive",
            _ => "nontransitive",
        };
        out.push((format!("{label} colored counts, G({d},{d},{n})"), ok, None));
    }
    out
}

fn chapuy_stump() -> Vec<Check> {
    let mut out = Vec::new();
    for spec in [
        GroupSpec::g_d1n(2, 2),
        GroupSpec::g_d1n(2, 3),
        GroupSpec::g_d1n(3, 2),
        GroupSpec::g_ddn(2, 3),
        GroupSpec::g_ddn(3, 3),
    ] {
        let counts = chapuy_stump_counts(&spec.invariants(), 6);
        let dp = reflection_dp(&spec, 6).unwrap();
        out.push((format!("{} reflection counts, l <= 6", spec.name()), counts == dp, None));
    }
    out
}

fn genus0() -> Vec<Check> {
    fn profiles(k: usize, total: u32) -> Vec<Vec<u32>> {
        let mut out: Vec<Vec<u32>> = vec![Vec::new()];
        for slot in 0..k {
            out = out
                .into_iter()
                .flat_map(|v| {
                    let used: u32 = v.iter().sum();
                    (0..=total - used).filter_map(move |s| {
                        let mut w = v.clone();
                        w.push(s);
                        (slot + 1 != k || w.iter().sum::<u32>() == total).then_some(w)
                    })
                })
                .collect();
        }
        out
    }
    let mut out = Vec::new();
    for (d, n) in [(2u32, 2usize), (3, 2), (2, 3)] {
        let spec = GroupSpec::g_d1n(d, n);
        let mut ok = true;
        let mut total = BigInt::zero();
        for s in profiles(2, n as u32) {
            let chains = chains_by_rank_jumps(&spec, 2, &s).unwrap();
            if chains != genus0_gd1n(d, n, &s) {
                ok = false;
            }
            total += chains;
        }
        let zeta_ok = total == zeta(&spec, 2).unwrap();
        out.push((format!("{} chains and zeta, k = 2", spec.name()), ok && zeta_ok, None));
    }
    for (d, n) in [(2u32, 3usize), (3, 3)] {
        let spec = GroupSpec::g_ddn(d, n);
        let mut ok = true;
        let mut total = BigInt::zero();
        for s in profiles(2, n as u32) {
            let chains = chains_by_rank_jumps(&spec, 2, &s).unwrap();
            if chains != genus0_gddn(d, n, &s) {
                ok = false;
            }
            total += chains;
        }
        let zeta_ok = total == zeta(&spec, 2).unwrap();
        out.push((format!("{} chains and zeta, k = 2", spec.name()), ok && zeta_ok, None));
    }
    out
}

fn alt_nc() -> Vec<Check> {
    let mut out = Vec::new();
    for spec in [
        GroupSpec::g_d1n(2, 2),
        GroupSpec::g_d1n(3, 2),
        GroupSpec::g_ddn(2, 3),
        GroupSpec::g_ddn(3, 3),
    ] {
        let codim = interval(&spec, IntervalOrder::CodimFix).unwrap();
        let refl = interval(&spec, IntervalOrder::ReflectionLength).unwrap();
        out.push((
            format!("{}: codim interval = reflection-length interval", spec.name()),
            codim.elements == refl.elements,
            Some(format!("{} elements", codim.len())),
        ));
    }
    out
}

fn cycle_type() -> Vec<Check> {
    let mut out = Vec::new();
    for (d, n, k) in [(2u32, 2usize, 2usize), (2, 3, 2), (3, 2, 2)] {
        let counts =
            count_by_weight0_type(&FactorQuery::new(GroupSpec::g_d1n(d, n), k)).unwrap();
        let lhs = weight0_counts_to_poly(d, k, n, &counts);
        let ok = lhs == cycle_type_rhs(d, n, k, n);
        out.push((format!("cycle type, G({d},1,{n}), k = {k}"), ok, None));
    }
    out
}

fn all_weights() -> Vec<Check> {
    let mut out = Vec::new();
    for (d, n, k) in [(2u32, 1usize, 2usize), (2, 2, 2), (3, 2, 2)] {
        let counts =
            count_by_weight_distribution(&FactorQuery::new(GroupSpec::g_d1n(d, n), k)).unwrap();
        let ok = weight_distribution_counts_to_poly(d, k, &counts) == all_weights_poly(d, n, k);
        out.push((
            format!("all-weights, G({d},1,{n}), k = {k}"),
            ok,
            Some("evaluated with the t^1-extraction reading of the printed statement".into()),
        ));
    }
    out
}

fn rank2() -> Vec<Check> {
    let mut out = Vec::new();
    for d in [2u32, 3] {
        let ok = rank2_poly(&GroupSpec::g_d1n(d, 2), 2).unwrap() == gd1n_poly(d, 2, 2);
        out.push((format!("G({d},1,2): rank-2 form restates the main theorem"), ok, None));
    }
    for d in [3u32, 4] {
        let sum = gddn_transitive_poly(d, 2, 2).add(&gddn_nontransitive_poly(d, 2, 2));
        let ok = rank2_poly(&GroupSpec::g_ddn(d, 2), 2).unwrap() == sum;
        out.push((format!("G({d},{d},2): rank-2 form = transitive + nontransitive"), ok, None));
    }
    for name in ["G4", "G5", "G6", "G8", "G9", "G10", "G14", "G16", "G17", "G18", "G20", "G21"] {
        let table = load_embedded(name).unwrap();
        let ok = exceptional_f(&table, 2).unwrap() == rank2_poly(&table.group_spec(), 2).unwrap();
        out.push((format!("{name}: table assembly = rank-2 form"), ok, None));
    }
    out
}

fn rank3() -> Vec<Check> {
    let mut out = Vec::new();
    let ok = rank3_poly(&GroupSpec::g_d1n(2, 3), 2).unwrap() == gd1n_poly(2, 3, 2);
    out.push(("G(2,1,3): rank-3 form restates the main theorem".into(), ok, None));
    let sum = gddn_transitive_poly(2, 3, 2).add(&gddn_nontransitive_poly(2, 3, 2));
    let ok = rank3_poly(&GroupSpec::g_ddn(2, 3), 2).unwrap() == sum;
    out.push(("G(2,2,3): rank-3 form = transitive + nontransitive".into(), ok, None));
    for name in ["G23", "G24", "G26", "G27"] {
        let table = load_embedded(name).unwrap();
        let ok = exceptional_f(&table, 2).unwrap() == rank3_poly(&table.group_spec(), 2).unwrap();
        out.push((format!("{name}: table assembly = rank-3 form"), ok, None));
    }
    let g25 = load_embedded("G25").unwrap();
    let ok = exceptional_f(&g25, 2).unwrap() == g25_poly(2);
    out.push(("G25: table assembly = six-product expansion".into(), ok, None));
    out
}

fn char_identities() -> Vec<Check> {
    let mut out = Vec::new();
    for name in embedded_table_names() {
        let table = load_embedded(name).unwrap();
        let report = char_poly_identity_check_table(&table);
        out.push((
            format!("{name}: f_triv and f_det rows present"),
            report.all_ok(),
            (!report.messages.is_empty()).then(|| report.messages.join("; ")),
        ));
    }
    for spec in [GroupSpec::g_d1n(2, 2), GroupSpec::g_d1n(3, 2), GroupSpec::g_ddn(3, 3)] {
        let report = char_poly_identity_check_wreath(&spec).unwrap();
        out.push((
            format!("{}: summation identities", spec.name()),
            report.all_ok(),
            (!report.messages.is_empty()).then(|| report.messages.join("; ")),
        ));
    }
    out
}
