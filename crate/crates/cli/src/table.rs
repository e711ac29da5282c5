//! Enumerate forms with `J = 0` over a range of `I`, solve `|F| <= h` for each
//! and count forms by `(#solutions of F = +1, #solutions of F = -1)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use quartic_thue::enumerate::{enumerate_range, BConvention};
use quartic_thue::thue::{solve, SolutionSet, SolverConfig};
use quartic_thue::{Error, QuarticForm};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::record;

/// Reference histogram over primitive forms with `-3000 <= I <= -3`, `h = 1`.
pub const REFERENCE_HISTOGRAM: [((usize, usize), usize); 10] = [
    ((0, 0), 7346),
    ((0, 1), 1003),
    ((0, 2), 97),
    ((0, 3), 5),
    ((1, 0), 1003),
    ((1, 1), 146),
    ((1, 2), 3),
    ((2, 0), 97),
    ((2, 1), 3),
    ((3, 0), 5),
];

pub const REFERENCE_TOTAL: usize = 9708;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TableRow {
    pub plus_count: usize,
    pub minus_count: usize,
    pub num_forms: usize,
}

impl TableRow {
    pub fn to_json(&self) -> Value {
        json!({ "plus": self.plus_count, "minus": self.minus_count, "forms": self.num_forms })
    }
}

#[derive(Clone, Debug)]
pub struct FormOutcome {
    pub i: i64,
    pub form: QuarticForm,
    pub result: Result<SolutionSet, Error>,
}

impl FormOutcome {
    /// Counts of solutions with `F = 1` and `F = -1`.
    pub fn unit_counts(&self) -> Option<(usize, usize)> {
        let s = self.result.as_ref().ok()?;
        let one = BigInt::from(1);
        let plus = s.plus.iter().filter(|p| p.value == one).count();
        let minus = s.minus.iter().filter(|p| p.value == -&one).count();
        Some((plus, minus))
    }

    pub fn to_json(&self) -> Value {
        match &self.result {
            Ok(s) => json!({
                "I": self.i,
                "form": record::form(&self.form),
                "plus": record::pairs(&s.plus),
                "minus": record::pairs(&s.minus),
                "error": null,
            }),
            Err(e) => json!({
                "I": self.i,
                "form": record::form(&self.form),
                "plus": null,
                "minus": null,
                "error": e.to_string(),
            }),
        }
    }
}

#[derive(Clone, Debug)]
pub struct TableReport {
    pub i_range: (i64, i64),
    pub h: u64,
    pub convention: BConvention,
    /// Forms with content above 1 were dropped.
    pub primitive_only: bool,
    /// Sorted by `I`, then by coefficients.
    pub outcomes: Vec<FormOutcome>,
}

/// Per-form properties that must hold whatever the enumeration convention.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TableProperties {
    pub max_per_sign: usize,
    pub max_total: usize,
    pub three_solution_forms: usize,
    pub non_diagonal_three: Vec<QuarticForm>,
    pub symmetric: bool,
    pub failures: usize,
}

impl TableProperties {
    pub fn hold(&self) -> bool {
        self.max_per_sign <= 3
            && self.max_total <= 8
            && self.non_diagonal_three.is_empty()
            && self.symmetric
            && self.failures == 0
    }
}

fn is_primitive(f: &QuarticForm) -> bool {
    f.dehomogenize().content() == BigInt::from(1)
}

pub fn run_table(
    i_min: i64,
    i_max: i64,
    h: u64,
    convention: BConvention,
    primitive_only: bool,
) -> anyhow::Result<TableReport> {
    let mut forms = enumerate_range(i_min, i_max, convention)?;
    if primitive_only {
        forms.retain(|(_, f)| is_primitive(f));
    }
    forms.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.coeffs().cmp(b.1.coeffs())));
    let cfg = SolverConfig::new(h);
    let outcomes = forms
        .into_par_iter()
        .map(|(i, form)| {
            let result = solve(&form, &cfg);
            FormOutcome { i, form, result }
        })
        .collect();
    Ok(TableReport { i_range: (i_min, i_max), h, convention, primitive_only, outcomes })
}

impl TableReport {
    /// The same run restricted to forms with content 1.
    pub fn primitive(&self) -> TableReport {
        TableReport {
            primitive_only: true,
            outcomes: self.outcomes.iter().filter(|o| is_primitive(&o.form)).cloned().collect(),
            ..self.clone()
        }
    }

    pub fn histogram(&self) -> BTreeMap<(usize, usize), usize> {
        let mut hist = BTreeMap::new();
        for counts in self.outcomes.iter().filter_map(FormOutcome::unit_counts) {
            *hist.entry(counts).or_insert(0) += 1;
        }
        hist
    }

    pub fn rows(&self) -> Vec<TableRow> {
        self.histogram()
            .into_iter()
            .map(|((plus_count, minus_count), num_forms)| TableRow { plus_count, minus_count, num_forms })
            .collect()
    }

    pub fn failures(&self) -> usize {
        self.outcomes.iter().filter(|o| o.result.is_err()).count()
    }

    pub fn properties(&self) -> TableProperties {
        let hist = self.histogram();
        let mut p = TableProperties {
            symmetric: hist.iter().all(|(&(m, n), c)| hist.get(&(n, m)) == Some(c)),
            failures: self.failures(),
            ..Default::default()
        };
        for o in &self.outcomes {
            let Some((plus, minus)) = o.unit_counts() else { continue };
            p.max_per_sign = p.max_per_sign.max(plus).max(minus);
            p.max_total = p.max_total.max(plus + minus);
            if plus == 3 || minus == 3 {
                p.three_solution_forms += 1;
                if !o.form.is_diagonal() {
                    p.non_diagonal_three.push(o.form.clone());
                }
            }
        }
        p
    }

    /// `true` when the histogram and the form count equal the reference table.
    pub fn matches_reference(&self) -> bool {
        let hist = self.histogram();
        let reference: BTreeMap<_, _> = REFERENCE_HISTOGRAM.into_iter().collect();
        hist == reference && self.outcomes.len() == REFERENCE_TOTAL
    }
}
