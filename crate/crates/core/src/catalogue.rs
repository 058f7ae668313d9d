//! Catalogue of the checked identities, with the discrepancies found
//! between their usual statements and what exact computation gives.

/// One checked identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Entry {
    /// Report identity name (`rec_j*` stands for the sixteen recurrences).
    pub id: &'static str,
    pub statement: &'static str,
    /// Range covered by the default configuration.
    pub default_range: &'static str,
    pub notes: &'static [&'static str],
}

/// Every identity the verifier knows about, in report order.
pub const ENTRIES: &[Entry] = &[
    Entry {
        id: "rec_j*",
        statement: "S_n(j) from its sixteen recurrences equals the enumeration of window-class tuples",
        default_range: "n = 0..=4, j = 0..=15",
        notes: &[
            "The j = 1 recurrence carries -a^3 b^3 q^{24n-12} S_{n-3}(9), unlike the other fifteen; it agrees with the enumerator exactly.",
            "The commonly quoted S_0(9) expansion lacks b^2 q^9. The partition {5,4} is valid and has top class 9, and J(0) = 0 requires the term.",
        ],
    },
    Entry {
        id: "J",
        statement: "J(n) = 0",
        default_range: "n = 0..=6",
        notes: &[
            "One argument for J(n) = 0 cites S_{n-10}(14); the j = 13 recurrence uses S_{n-1}(14), which is what is implemented.",
        ],
    },
    Entry {
        id: "K",
        statement: "K(n) = 0",
        default_range: "n = 0..=6",
        notes: &[],
    },
    Entry {
        id: "link",
        statement: "a^2 b q^{12n+19} J(n) - K(n+1) + a q^{6n+13}(1 + a q^{6n+2} + b q^{6n+4} + b q^{6n+5}) K(n) = 0",
        default_range: "n = 0..=5",
        notes: &[],
    },
    Entry {
        id: "lemma2",
        statement: "fourth-order recurrence for S_n(9) with coefficients p1, p2, p3",
        default_range: "n = 0..=4",
        notes: &[
            "Its derivation cites a lemma that does not exist; the vanishing of J and K is what it needs.",
        ],
    },
    Entry {
        id: "lemma3",
        statement: "fourth-order recurrence for S_n(15), coefficients p_i(n-1) at (aq^6, bq^6)",
        default_range: "n = 0..=4",
        notes: &[
            "Fails at n = 0: the residual has 19 terms, all with positive coefficients, starting with a b q^0. It vanishes for n = 1..=5. The claim should read n >= 1.",
        ],
    },
    Entry {
        id: "lemma4",
        statement: "S_n(15) has the product form built from the first window and S_{n-1}(15) at (aq^6, bq^6)",
        default_range: "n = 0..=4",
        notes: &[],
    },
    Entry {
        id: "product",
        statement: "S_n(15) agrees with the infinite product through q^{6n+6}",
        default_range: "n = 0..=6",
        notes: &[],
    },
    Entry {
        id: "theorem3",
        statement: "A(mu, nu, N) = B(mu, nu, N) = coefficient of the product",
        default_range: "N <= 50",
        notes: &[
            "Side A is sometimes described as distinct non-multiples of 6; the product only admits parts congruent to 1, 2, 4, 5 mod 6, which is the definition used.",
        ],
    },
    Entry {
        id: "theorem1[lambda,k,a]",
        statement: "A_{lambda,k,a}(n) = B_{lambda,k,a}(n) for lambda/2 <= a <= k, k >= lambda",
        default_range: "(2,2,2), (2,3,2), (2,3,3), (3,3,2), (3,3,3), n <= 40",
        notes: &[
            "B_{lambda,k,a} needs the condition f_1 + ... + f_{lambda+1} <= a - 1; without it (2,3,2) and (3,3,2) fail.",
        ],
    },
    Entry {
        id: "conj433",
        statement: "A_{4,3,3}(n) = B^0_{4,3,3}(n)",
        default_range: "n <= 40",
        notes: &[],
    },
    Entry {
        id: "theorem2",
        statement: "A_{5,3,3}(n) = B^0_{5,3,3}(n)",
        default_range: "n <= 40",
        notes: &[],
    },
    Entry {
        id: "thm2_consistency",
        statement: "the window-based difference conditions and B^0_{5,3,3} count the same partitions",
        default_range: "N <= 40",
        notes: &[],
    },
];

pub fn lookup(id: &str) -> Option<&'static Entry> {
    ENTRIES.iter().find(|e| e.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<_> = ENTRIES.iter().map(|e| e.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), ENTRIES.len());
        assert!(lookup("lemma3").is_some_and(|e| !e.notes.is_empty()));
        assert!(lookup("nope").is_none());
    }
}
