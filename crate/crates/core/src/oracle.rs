//! Independent brute-force verification: exhaustive distances, the full
//! ideal lattice of tiny ambients, and computational checks of the
//! structural facts the distance reduction relies on. Nothing here reuses
//! the Gröbner route, so agreement between the two is meaningful.

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::ambient::{Ambient, AmbientElement, CodeKind};
use crate::error::{Error, Result};
use crate::howell::SpanMatrix;
use crate::ideal::{closure_rows, devectorize, engine, Ideal, SpanBasis};
use crate::report::Check;
use crate::scalar::{self, Scalar};

/// Default element budget for exhaustive operations.
pub const DEFAULT_ENUM_BOUND: u128 = 1 << 20;

/// Hamming weight of a vectorized codeword: nonzero Galois coefficients.
fn row_weight<I: Scalar>(v: &[I], m: usize) -> usize {
    v.chunks(m).filter(|c| c.iter().any(|x| !x.is_zero())).count()
}

/// Exhaustive minimum weight over the nonzero codewords; 0 for the zero code.
pub fn brute_distance<I: Scalar>(ideal: &Ideal<I>, limit: u128) -> Result<u64> {
    let required = ideal
        .cardinality()
        .ok_or(Error::EnumerationBound { required: u128::MAX, limit })?;
    if required > limit {
        return Err(Error::EnumerationBound { required, limit });
    }
    let m = ideal.ambient().ring().m();
    let mut best: Option<usize> = None;
    ideal.for_each_element(|v| {
        let w = row_weight(v, m);
        if w > 0 && best.is_none_or(|b| w < b) {
            best = Some(w);
        }
    });
    Ok(best.unwrap_or(0) as u64)
}

/// Visit every element of the ambient ring once, in a fixed order.
pub fn for_each_ambient_element<I: Scalar, F: FnMut(AmbientElement<I>)>(
    ambient: &Ambient<I>,
    limit: u128,
    mut f: F,
) -> Result<()> {
    let required = ambient
        .cardinality()
        .ok_or(Error::EnumerationBound { required: u128::MAX, limit })?;
    if required > limit {
        return Err(Error::EnumerationBound { required, limit });
    }
    let ncols = ambient.n() * ambient.ring().m();
    let q = ambient.ring().q().clone();
    let mut counter = vec![I::zero(); ncols];
    loop {
        f(devectorize(ambient, &counter));
        let mut pos = 0;
        loop {
            if pos == ncols {
                return Ok(());
            }
            counter[pos] = counter[pos].clone() + I::one();
            if counter[pos] == q {
                counter[pos] = I::zero();
                pos += 1;
            } else {
                break;
            }
        }
    }
}

/// All distinct principal ideals, canonically sorted. The scan walks every
/// ring element, so the ambient cardinality must stay within `limit`.
pub fn principal_ideals<I: Scalar>(ambient: &Ambient<I>, limit: u128) -> Result<Vec<Ideal<I>>> {
    let eng = engine(ambient);
    let ncols = ambient.n() * ambient.ring().m();
    let mut seen: HashMap<SpanMatrix<I>, AmbientElement<I>> = HashMap::new();
    for_each_ambient_element(ambient, limit, |f| {
        let span = eng.howellize(ncols, closure_rows(ambient, std::slice::from_ref(&f)));
        seen.entry(span).or_insert(f);
    })?;
    let mut entries: Vec<(SpanMatrix<I>, AmbientElement<I>)> = seen.into_iter().collect();
    entries.sort_by_key(|e| span_sort_key(&eng, &e.0));
    Ok(entries.into_iter().map(|(_, g)| Ideal::principal(g)).collect())
}

fn span_sort_key<I: Scalar>(
    eng: &crate::howell::Engine<I>,
    span: &SpanMatrix<I>,
) -> (u128, Vec<Vec<I>>) {
    (eng.span_cardinality(span).unwrap_or(u128::MAX), span.rows.clone())
}

/// One ideal of the lattice.
#[derive(Clone, Debug)]
pub struct LatticeNode<I: Scalar> {
    pub ideal: Ideal<I>,
    pub basis: SpanBasis<I>,
    pub cardinality: u128,
    pub is_principal: bool,
}

/// Indices of the named ideals inside the node list.
#[derive(Clone, Debug)]
pub struct Distinguished {
    pub zero: usize,
    pub unit: usize,
    pub radical: usize,
    pub socle: usize,
    pub ideal_p: usize,
    pub ideal_shift: usize,
    pub radical_is_principal: bool,
}

/// The complete ideal lattice of a tiny ambient.
#[derive(Clone, Debug)]
pub struct LatticeReport<I: Scalar> {
    pub ambient: Ambient<I>,
    pub nodes: Vec<LatticeNode<I>>,
    /// Covering relations (lower index, upper index).
    pub edges: Vec<(usize, usize)>,
    pub distinguished: Distinguished,
    /// "x+1", or "x-1" for cyclic ambients with odd p.
    pub shift_name: &'static str,
}

/// Complete ideal lattice: all principal ideals closed under pairwise sums.
pub fn build_lattice<I: Scalar>(ambient: &Ambient<I>, limit: u128) -> Result<LatticeReport<I>> {
    let eng = engine(ambient);
    let ncols = ambient.n() * ambient.ring().m();
    let principal = principal_ideals(ambient, limit)?;
    let principal_spans: Vec<SpanMatrix<I>> =
        principal.iter().map(|i| i.span_basis().matrix).collect();

    let mut spans: Vec<SpanMatrix<I>> = Vec::new();
    let mut index: HashMap<SpanMatrix<I>, usize> = HashMap::new();
    for s in &principal_spans {
        if !index.contains_key(s) {
            index.insert(s.clone(), spans.len());
            spans.push(s.clone());
        }
    }
    // close under pairwise sums
    let mut fresh = 0usize;
    while fresh < spans.len() {
        let upto = spans.len();
        for i in fresh..upto {
            for j in 0..=i {
                let mut rows = spans[i].rows.clone();
                rows.extend_from_slice(&spans[j].rows);
                let sum = eng.howellize(ncols, rows);
                if !index.contains_key(&sum) {
                    index.insert(sum.clone(), spans.len());
                    spans.push(sum);
                }
            }
        }
        fresh = upto;
    }
    spans.sort_by_key(|s| span_sort_key(&eng, s));

    let principal_set: std::collections::HashSet<&SpanMatrix<I>> =
        principal_spans.iter().collect();
    let mut nodes = Vec::with_capacity(spans.len());
    for span in &spans {
        let gens: Vec<AmbientElement<I>> = if span.rows.is_empty() {
            vec![ambient.zero()]
        } else {
            span.rows.iter().map(|r| devectorize(ambient, r)).collect()
        };
        let ideal = Ideal::new(ambient.clone(), gens)?;
        nodes.push(LatticeNode {
            basis: ideal.span_basis(),
            cardinality: eng.span_cardinality(span).ok_or_else(|| {
                Error::TooLarge("lattice node cardinality exceeds u128".into())
            })?,
            is_principal: principal_set.contains(span),
            ideal,
        });
    }

    // inclusion matrix, then covering edges
    let k = nodes.len();
    let contains = |big: usize, small: usize| -> bool {
        spans[small].rows.iter().all(|r| eng.contains(&spans[big], r))
    };
    let mut below = vec![Vec::new(); k];
    for (upper, entry) in below.iter_mut().enumerate() {
        for lower in 0..k {
            if lower != upper && contains(upper, lower) {
                entry.push(lower); // strictly below: spans are distinct
            }
        }
    }
    let mut edges = Vec::new();
    for upper in 0..k {
        for &lower in &below[upper] {
            let covered = below[upper]
                .iter()
                .any(|&mid| mid != lower && below[mid].contains(&lower));
            if !covered {
                edges.push((lower, upper));
            }
        }
    }
    edges.sort();

    let find = |target: &Ideal<I>| -> Result<usize> {
        let span = target.span_basis().matrix;
        spans
            .iter()
            .position(|s| *s == span)
            .ok_or_else(|| Error::Internal("distinguished ideal missing from lattice".into()))
    };
    let ring = ambient.ring();
    let p_elem = ambient.monomial(0, &ring.p_power(1));
    let shift = ambient.shift();
    let radical = Ideal::new(ambient.clone(), vec![p_elem.clone(), shift.clone()])?;
    let socle_gen = shift
        .pow_u64(ambient.n() as u64 - 1)
        .scale(&ring.p_power(ring.a() - 1))?;
    let radical_idx = find(&radical)?;
    let distinguished = Distinguished {
        zero: find(&Ideal::zero(ambient))?,
        unit: find(&Ideal::unit(ambient))?,
        radical: radical_idx,
        socle: find(&Ideal::principal(socle_gen))?,
        ideal_p: find(&Ideal::principal(p_elem))?,
        ideal_shift: find(&Ideal::principal(shift))?,
        radical_is_principal: nodes[radical_idx].is_principal,
    };
    Ok(LatticeReport {
        ambient: ambient.clone(),
        nodes,
        edges,
        distinguished,
        shift_name: if ambient.has_xplus1_structure() { "x+1" } else { "x-1" },
    })
}

/// Report of the structural checks on one ambient.
#[derive(Clone, Debug)]
pub struct StructureReport {
    pub checks: Vec<Check>,
    pub nilpotency: u64,
    /// True when the ambient is a chain ring (a = 1, or p = 2 negacyclic);
    /// the incomparability checks are replaced by chain comparability.
    pub chain_mode: bool,
    pub lattice_size: usize,
}

/// Certify, by enumeration: units vs radical and nilpotency of non-units,
/// the socle as annihilator of the radical and its simplicity, (in)chain
/// structure, the closed-form nilpotency index, and the a-generation bound
/// over the whole lattice.
pub fn verify_structure<I: Scalar>(ambient: &Ambient<I>, limit: u128) -> Result<StructureReport> {
    let ring = ambient.ring();
    let a = ring.a();
    let eng = engine(ambient);
    let ncols = ambient.n() * ring.m();
    let chain_mode =
        a == 1 || (*ring.p() == scalar::int(2) && ambient.kind() == CodeKind::Negacyclic);
    let lattice = build_lattice(ambient, limit)?;
    let mut checks = Vec::new();

    // (a) non-units = <p, shift>, and each is nilpotent
    let radical = &lattice.nodes[lattice.distinguished.radical].ideal;
    let mut units_ok = true;
    let mut nilpotent_ok = true;
    let mut non_units = 0u64;
    for_each_ambient_element(ambient, limit, |f| {
        let in_rad = radical.contains(&f).expect("same ambient");
        if f.is_unit() == in_rad {
            units_ok = false;
        }
        if in_rad {
            non_units += 1;
            let mut sq = f;
            let mut nil = false;
            for _ in 0..40 {
                if sq.is_zero() {
                    nil = true;
                    break;
                }
                sq = sq.mul(&sq).expect("same ambient");
            }
            if !nil {
                nilpotent_ok = false;
            }
        }
    })?;
    checks.push(Check::new(
        "non-units are exactly <p, shift> and all nilpotent",
        units_ok && nilpotent_ok,
        format!("{non_units} non-units"),
    ));

    // (b) annihilator of the radical = <p^(a-1) shift^(n-1)>, and it is simple
    let ann_span = annihilator_of_radical(ambient);
    let socle = &lattice.nodes[lattice.distinguished.socle].ideal;
    let ann_matches = ann_span == socle.span_basis().matrix;
    checks.push(Check::new(
        "annihilator of the radical equals <p^(a-1) shift^(n-1)>",
        ann_matches,
        format!("annihilator has {} elements", eng.span_cardinality(&ann_span).unwrap_or(0)),
    ));
    let socle_card = eng.span_cardinality(&ann_span).unwrap_or(0);
    let pm = ring
        .p()
        .to_u128()
        .map(|p| p.pow(ring.m() as u32))
        .unwrap_or(0);
    let mut simple = socle_card == pm;
    if simple {
        eng.for_each_element(&ann_span, |v| {
            if v.iter().any(|c| !c.is_zero()) {
                let gen = devectorize(ambient, v);
                let span = eng.howellize(ncols, closure_rows(ambient, &[gen]));
                if span != ann_span {
                    simple = false;
                }
            }
        });
    }
    checks.push(Check::new(
        "socle is a simple module",
        simple,
        format!("cardinality {socle_card} = p^m, every nonzero element generates"),
    ));

    // (c) chain vs non-chain
    if chain_mode {
        let mut comparable = true;
        for i in 0..lattice.nodes.len() {
            for j in 0..i {
                let si = &lattice.nodes[i].basis.matrix;
                let sj = &lattice.nodes[j].basis.matrix;
                let i_in_j = si.rows.iter().all(|r| eng.contains(sj, r));
                let j_in_i = sj.rows.iter().all(|r| eng.contains(si, r));
                if !i_in_j && !j_in_i {
                    comparable = false;
                }
            }
        }
        checks.push(Check::new(
            "ideal lattice is a chain",
            comparable,
            format!("{} ideals totally ordered", lattice.nodes.len()),
        ));
    } else {
        let p_ideal = &lattice.nodes[lattice.distinguished.ideal_p].ideal;
        let shift_ideal = &lattice.nodes[lattice.distinguished.ideal_shift].ideal;
        let p_elem = ambient.monomial(0, &ring.p_power(1));
        let incomparable = !shift_ideal.contains(&p_elem)?
            && !p_ideal.contains(&ambient.shift())?;
        checks.push(Check::new(
            "p and shift generate incomparable ideals (not a chain ring)",
            incomparable,
            format!(
                "p in <{sh}>: {}, {sh} in <p>: {}",
                shift_ideal.contains(&p_elem)?,
                p_ideal.contains(&ambient.shift())?,
                sh = lattice.shift_name
            ),
        ));
        checks.push(Check::new(
            "radical <p, shift> is not principal",
            !lattice.distinguished.radical_is_principal,
            String::new(),
        ));
    }

    // (d) nilpotency index matches direct powering
    let closed = ambient.nilpotency_index();
    let shift = ambient.shift();
    let powering_ok =
        shift.pow_u64(closed).is_zero() && !shift.pow_u64(closed - 1).is_zero();
    checks.push(Check::new(
        "nilpotency of the shift matches the closed form",
        powering_ok,
        format!("index {closed}"),
    ));

    // (e) every lattice ideal is generated by at most a elements,
    //     witnessed by a small subset of a generating frame
    let mut gen_ok = true;
    for node in &lattice.nodes {
        let mut frame: Vec<AmbientElement<I>> =
            node.basis.rows_as_elements(ambient);
        let reduced = node.ideal.reduce_generators()?;
        frame.extend(reduced.generators().iter().cloned());
        if !some_small_subset_generates(&eng, ncols, ambient, &frame, &node.basis.matrix, a as usize)
        {
            gen_ok = false;
        }
    }
    checks.push(Check::new(
        "every lattice ideal needs at most a generators",
        gen_ok,
        format!("{} ideals checked", lattice.nodes.len()),
    ));

    Ok(StructureReport {
        checks,
        nilpotency: closed,
        chain_mode,
        lattice_size: lattice.nodes.len(),
    })
}

/// ann(<p, shift>) as a module: kernel of v -> (p v, shift v).
fn annihilator_of_radical<I: Scalar>(ambient: &Ambient<I>) -> SpanMatrix<I> {
    let eng = engine(ambient);
    let ring = ambient.ring();
    let ncols = ambient.n() * ring.m();
    let shift = ambient.shift();
    let mut rows = Vec::with_capacity(ncols);
    for k in 0..ncols {
        let mut unit = vec![I::zero(); ncols];
        unit[k] = I::one();
        let e = devectorize(ambient, &unit);
        let mut row = Vec::with_capacity(3 * ncols);
        row.extend(crate::ideal::vectorize(
            &e.scale(&ring.p_power(1)).expect("same ring"),
        ));
        row.extend(crate::ideal::vectorize(&e.mul(&shift).expect("same ambient")));
        row.extend(unit);
        rows.push(row);
    }
    let aug = eng.howellize(3 * ncols, rows);
    let sols: Vec<Vec<I>> = aug
        .rows
        .into_iter()
        .filter(|r| r[..2 * ncols].iter().all(|c| c.is_zero()))
        .map(|r| r[2 * ncols..].to_vec())
        .collect();
    eng.howellize(ncols, sols)
}

fn some_small_subset_generates<I: Scalar>(
    eng: &crate::howell::Engine<I>,
    ncols: usize,
    ambient: &Ambient<I>,
    frame: &[AmbientElement<I>],
    target: &SpanMatrix<I>,
    a: usize,
) -> bool {
    let k = frame.len().min(20);
    for mask in 1u32..(1 << k) {
        if (mask.count_ones() as usize) > a {
            continue;
        }
        let subset: Vec<AmbientElement<I>> = (0..k)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| frame[i].clone())
            .collect();
        let span = eng.howellize(ncols, closure_rows(ambient, &subset));
        if span == *target {
            return true;
        }
    }
    // the zero ideal: empty basis, zero generator
    target.rows.is_empty()
}

/// Exhaustive check that p^(n-l) divides C(p^n, k) for all k <= p^n / 2,
/// where l is the p-valuation of k. One check per exponent n.
pub fn verify_binomial_lemma(p: u64, n_max: u32) -> Vec<Check> {
    let mut checks = Vec::new();
    for n in 1..=n_max {
        let pn_u = p.pow(n);
        let pn = BigUint::from(pn_u);
        let mut binom = BigUint::from(1u32);
        let mut ok = true;
        let mut tested = 0u64;
        for k in 1..=pn_u / 2 {
            // C(pn, k) = C(pn, k-1) * (pn - k + 1) / k
            binom = binom * (pn.clone() - BigUint::from(k - 1)) / BigUint::from(k);
            let l = scalar::valuation(&k, &p, n);
            let divisor = BigUint::from(p).pow(n - l);
            if (binom.clone() % divisor) != BigUint::from(0u32) {
                ok = false;
                break;
            }
            tested += 1;
        }
        checks.push(Check::new(
            format!("p^(n-l) | C(p^n, k) for p={p}, n={n}"),
            ok,
            format!("{tested} binomials checked"),
        ));
    }
    checks
}

/// Computational form of the main expansion lemma: for 0 <= t <= a-2 the
/// power shift^(p^s + t (p-1) p^(s-1)) has p-content exactly t+1, and its
/// p^(t+1)-cofactor reduces mod p to valuation exactly p^(s-1). Defined for
/// odd negacyclic and p = 2 cyclic ambients; odd cyclic conjugates through
/// x -> -x.
pub fn verify_main_expansion<I: Scalar>(ambient: &Ambient<I>) -> Result<Vec<Check>> {
    let ring = ambient.ring();
    let p_is_two = *ring.p() == scalar::int(2);
    match ambient.kind() {
        CodeKind::Negacyclic if p_is_two => {
            return Err(Error::Unsupported(
                "the expansion lemma targets odd negacyclic and p = 2 cyclic ambients".into(),
            ))
        }
        CodeKind::Cyclic if !p_is_two => {
            return verify_main_expansion(&ambient.opposite_kind());
        }
        _ => {}
    }
    let a = ring.a();
    let p = ring
        .p()
        .to_u64()
        .ok_or_else(|| Error::TooLarge("expansion checks need p to fit u64".into()))?;
    let n = ambient.n() as u64;
    let ps1 = n / p;
    let xp1 = ambient.x_plus_one();
    let mut checks = Vec::new();

    let base = xp1.pow_u64(n);
    checks.push(Check::new(
        "shift^(p^s) is divisible by p",
        base.p_content() >= 1,
        format!("content {}", base.p_content()),
    ));

    for t in 0..a.saturating_sub(1) {
        let e = xp1.pow_u64(n + t as u64 * (p - 1) * ps1);
        let content_ok = e.p_content() == t + 1;
        checks.push(Check::new(
            format!("p-content of shift^(p^s + {t}(p-1)p^(s-1)) is exactly {}", t + 1),
            content_ok,
            format!("content {}", e.p_content()),
        ));
        if !content_ok {
            continue;
        }
        let cofactor = e.divide_exact_by_p(t + 1)?.reduce_mod_p();
        let val = cofactor.shift_valuation() as u64;
        checks.push(Check::new(
            format!("cofactor of level {} has shift valuation p^(s-1)", t + 1),
            val == ps1,
            format!("valuation {val}, expected {ps1}"),
        ));
    }
    Ok(checks)
}
