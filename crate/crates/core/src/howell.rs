//! Canonical (Howell-style) bases for submodules of (Z_{p^a})^N.
//!
//! Every finitely generated submodule has a unique basis in which pivots are
//! normalized powers of p with strictly increasing columns, entries above a
//! pivot are reduced below it, and the rows with pivot column at least c
//! span exactly the members vanishing on the first c coordinates (maintained
//! by inserting annihilator multiples p^(a-e) * row). Uniqueness makes
//! row-by-row comparison an exact equality test for submodules, which is
//! what the ideal layer builds on.

use crate::scalar::{self, Scalar};

#[derive(Clone, Debug)]
pub(crate) struct Engine<I: Scalar> {
    pub p: I,
    pub a: u32,
    pub q: I,
}

/// Canonical row basis; rows sorted by pivot column.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct SpanMatrix<I: Scalar> {
    pub ncols: usize,
    pub rows: Vec<Vec<I>>,
    /// (pivot column, pivot valuation) per row.
    pub pivots: Vec<(usize, u32)>,
}

impl<I: Scalar> Engine<I> {
    pub fn new(p: I, a: u32) -> Self {
        let q = scalar::pow_small(&p, a);
        Engine { p, a, q }
    }

    pub fn val(&self, x: &I) -> u32 {
        scalar::valuation(x, &self.p, self.a)
    }

    fn row_is_zero(&self, r: &[I]) -> bool {
        r.iter().all(|c| c.is_zero())
    }

    fn row_sub_scaled(&self, r: &mut [I], s: &[I], factor: &I) {
        for (a, b) in r.iter_mut().zip(s) {
            let t = scalar::mul_mod(factor, b, &self.q);
            *a = scalar::sub_mod(a, &t, &self.q);
        }
    }

    fn row_scale(&self, r: &[I], factor: &I) -> Vec<I> {
        r.iter().map(|c| scalar::mul_mod(factor, c, &self.q)).collect()
    }

    /// Scale the row by the inverse of the unit part of r[c], making the
    /// pivot entry exactly p^e.
    fn normalize_at(&self, r: &mut Vec<I>, c: usize, e: u32) {
        let unit = scalar::exact_div(&r[c], &scalar::pow_small(&self.p, e));
        if unit.is_one() {
            return;
        }
        let inv = scalar::inv_unit_mod(&unit, &self.p, &self.q);
        *r = self.row_scale(r, &inv);
        debug_assert_eq!(r[c], scalar::pow_small(&self.p, e) % self.q.clone());
    }

    /// Canonical basis of the row span.
    pub fn howellize(&self, ncols: usize, rows: Vec<Vec<I>>) -> SpanMatrix<I> {
        use std::collections::BTreeMap;
        let mut basis: BTreeMap<usize, Vec<I>> = BTreeMap::new();
        let mut queue: Vec<Vec<I>> = rows
            .into_iter()
            .map(|r| {
                debug_assert_eq!(r.len(), ncols);
                r.into_iter().map(|c| c % self.q.clone()).collect()
            })
            .collect();
        let mut guard = 0usize;
        while let Some(mut r) = queue.pop() {
            guard += 1;
            assert!(
                guard < 64 * (ncols + 1) * (self.a as usize + 1) * (queue.len() + ncols + 2),
                "howellize did not terminate"
            );
            let mut c = 0;
            loop {
                while c < ncols && r[c].is_zero() {
                    c += 1;
                }
                if c == ncols {
                    break;
                }
                let vr = self.val(&r[c]);
                match basis.get(&c) {
                    None => {
                        self.normalize_at(&mut r, c, vr);
                        if vr > 0 {
                            let ann = scalar::pow_small(&self.p, self.a - vr) % self.q.clone();
                            queue.push(self.row_scale(&r, &ann));
                        }
                        basis.insert(c, r);
                        break;
                    }
                    Some(b) => {
                        let vb = self.val(&b[c]);
                        if vr >= vb {
                            let factor = scalar::exact_div(&r[c], &scalar::pow_small(&self.p, vb));
                            let b = b.clone();
                            self.row_sub_scaled(&mut r, &b, &factor);
                            debug_assert!(r[c].is_zero());
                        } else {
                            self.normalize_at(&mut r, c, vr);
                            if vr > 0 {
                                let ann = scalar::pow_small(&self.p, self.a - vr) % self.q.clone();
                                queue.push(self.row_scale(&r, &ann));
                            }
                            let old = basis.insert(c, r).expect("pivot existed");
                            queue.push(old);
                            break;
                        }
                    }
                }
            }
        }
        // entries above a pivot are reduced below the pivot value
        let cols: Vec<usize> = basis.keys().cloned().collect();
        for (i, ci) in cols.iter().enumerate() {
            for cj in &cols[i + 1..] {
                let e = self.val(&basis[cj][*cj]);
                let entry = basis[ci][*cj].clone();
                let factor = entry / scalar::pow_small(&self.p, e);
                if !factor.is_zero() {
                    let other = basis[cj].clone();
                    let row = basis.get_mut(ci).expect("pivot exists");
                    self.row_sub_scaled(row, &other, &factor);
                }
            }
        }
        let mut rows = Vec::with_capacity(basis.len());
        let mut pivots = Vec::with_capacity(basis.len());
        for (c, r) in basis {
            let e = self.val(&r[c]);
            pivots.push((c, e));
            rows.push(r);
        }
        SpanMatrix { ncols, rows, pivots }
    }

    /// Reduce `v` against pivots in columns < `limit`; member vectors of the
    /// span reduce to zero on that prefix (fully, with `limit = ncols`).
    pub fn reduce(&self, span: &SpanMatrix<I>, v: &mut [I], limit: usize) {
        for (row, (c, e)) in span.rows.iter().zip(&span.pivots) {
            if *c >= limit {
                break;
            }
            if v[*c].is_zero() {
                continue;
            }
            if self.val(&v[*c]) < *e {
                continue; // cannot be cleared; v is not a member
            }
            let factor = scalar::exact_div(&v[*c], &scalar::pow_small(&self.p, *e));
            self.row_sub_scaled(v, row, &factor);
        }
    }

    pub fn contains(&self, span: &SpanMatrix<I>, v: &[I]) -> bool {
        let mut w = v.to_vec();
        self.reduce(span, &mut w, span.ncols);
        self.row_is_zero(&w)
    }

    /// The module (span : p^j) = every v with p^j v in span, computed from an
    /// augmented system [p^j I | I], [rows | 0]: combined rows with vanishing
    /// value part carry the solutions in their tag part.
    pub fn colon_p_power(&self, span: &SpanMatrix<I>, j: u32) -> SpanMatrix<I> {
        let n = span.ncols;
        let pj = scalar::pow_small(&self.p, j.min(self.a)) % self.q.clone();
        let mut rows = Vec::with_capacity(n + span.rows.len());
        for k in 0..n {
            let mut r = vec![I::zero(); 2 * n];
            r[k] = pj.clone();
            r[n + k] = I::one();
            rows.push(r);
        }
        for sr in &span.rows {
            let mut r = sr.clone();
            r.resize(2 * n, I::zero());
            rows.push(r);
        }
        let aug = self.howellize(2 * n, rows);
        let sol: Vec<Vec<I>> = aug
            .rows
            .into_iter()
            .filter(|r| r[..n].iter().all(|c| c.is_zero()))
            .map(|r| r[n..].to_vec())
            .collect();
        self.howellize(n, sol)
    }

    /// Split `w = u + v` with u in span(tagged) and v in span(plain);
    /// returns u, or None when no such decomposition exists.
    pub fn split_membership(
        &self,
        ncols: usize,
        tagged: &[Vec<I>],
        plain: &[Vec<I>],
        w: &[I],
    ) -> Option<Vec<I>> {
        let mut rows = Vec::with_capacity(tagged.len() + plain.len());
        for t in tagged {
            let mut r = t.clone();
            r.extend_from_slice(t);
            rows.push(r);
        }
        for p in plain {
            let mut r = p.clone();
            r.resize(2 * ncols, I::zero());
            rows.push(r);
        }
        let aug = self.howellize(2 * ncols, rows);
        let mut v = w.to_vec();
        v.resize(2 * ncols, I::zero());
        self.reduce(&aug, &mut v, ncols);
        if !v[..ncols].iter().all(|c| c.is_zero()) {
            return None;
        }
        Some(v[ncols..].iter().map(|c| scalar::neg_mod(c, &self.q)).collect())
    }

    /// Number of elements in the span, if it fits in u128.
    pub fn span_cardinality(&self, span: &SpanMatrix<I>) -> Option<u128> {
        let p = self.p.to_u128()?;
        let mut card: u128 = 1;
        for (_, e) in &span.pivots {
            for _ in 0..(self.a - e) {
                card = card.checked_mul(p)?;
            }
        }
        Some(card)
    }

    /// Visit every element of the span exactly once.
    pub fn for_each_element<F: FnMut(&[I])>(&self, span: &SpanMatrix<I>, mut f: F) {
        let k = span.rows.len();
        if k == 0 {
            f(&vec![I::zero(); span.ncols]);
            return;
        }
        let reps: Vec<u128> = span
            .pivots
            .iter()
            .map(|(_, e)| {
                let p = self.p.to_u128().expect("enumeration requires p to fit u128");
                p.pow(self.a - e)
            })
            .collect();
        // wrap_i undoes reps_i - 1 additions of row i in one vector add
        let wraps: Vec<Vec<I>> = span
            .rows
            .iter()
            .zip(&reps)
            .map(|(r, reps)| {
                let c = I::from_u128(reps - 1).expect("repetition count fits the scalar")
                    % self.q.clone();
                self.row_scale(r, &scalar::neg_mod(&c, &self.q))
            })
            .collect();
        let mut counters = vec![0u128; k];
        let mut cur = vec![I::zero(); span.ncols];
        loop {
            f(&cur);
            let mut i = 0;
            loop {
                if i == k {
                    return;
                }
                counters[i] += 1;
                if counters[i] < reps[i] {
                    let row = &span.rows[i];
                    for (a, b) in cur.iter_mut().zip(row) {
                        *a = scalar::add_mod(a, b, &self.q);
                    }
                    break;
                }
                counters[i] = 0;
                for (a, b) in cur.iter_mut().zip(&wraps[i]) {
                    *a = scalar::add_mod(a, b, &self.q);
                }
                i += 1;
            }
        }
    }
}

impl<I: Scalar> SpanMatrix<I> {
    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}
