//! Worked examples used throughout the tests and shipped as files under
//! `fixtures/`.

use crate::family::SetFamily;

const F_EX_STATES: &[&str] = &[
    "", "b", "c", "ab", "ac", "bc", "bd", "abc", "abd", "bcd", "bce", "bdf", "abcd", "abce",
    "bcde", "bcdf", "bcef", "abdf", "abcde", "abcdf", "abcef", "bcdef", "abcdef", "abcdefg",
];

const G_EX_STATES: &[&str] = &["", "a", "b", "c", "ab", "ac", "abc"];

const L_EX_STATES: &[&str] = &[
    "abc", "cde", "abcf", "cdeg", "abcdf", "bcdeg", "abcdef", "abcdeg", "abcdefg",
];

const K_NY_STATES: &[&str] = &[
    "", "a", "b", "c", "ab", "ac", "bc", "abc", "cd", "acd", "bcd", "abd", "abcd",
];

fn letters_family(domain: &str, states: &[&str]) -> SetFamily {
    let domain: Vec<String> = domain.chars().map(String::from).collect();
    let domain: Vec<&str> = domain.iter().map(String::as_str).collect();
    let states: Vec<Vec<String>> = states
        .iter()
        .map(|s| s.chars().map(String::from).collect())
        .collect();
    let states: Vec<&[String]> = states.iter().map(Vec::as_slice).collect();
    SetFamily::from_names(&domain, &states).expect("fixture is well formed")
}

/// The 24-state learning space on `{a,...,g}` used for the projection on
/// `{a,d,f}`.
pub fn f_ex() -> SetFamily {
    letters_family("abcdefg", F_EX_STATES)
}

/// A knowledge structure that is not union-closed although its `{c}`
/// projection and both `{c}`-children are.
pub fn g_ex() -> SetFamily {
    letters_family("abc", G_EX_STATES)
}

/// Two chains meeting only in their common top `{a,...,g}`.
pub fn l_ex() -> SetFamily {
    letters_family("abcdefg", L_EX_STATES)
}

/// A learning space on `{a,b,c,d}` for which `{d}` is not yielding: the
/// minimal state `{a,b,d}` of the `d`-class exceeds the class core `{d}` by
/// two items.
pub fn k_ny() -> SetFamily {
    letters_family("abcd", K_NY_STATES)
}

/// Builds a family on single-letter items from compact strings such as
/// `["", "a", "ab"]`.
pub fn letters(domain: &str, states: &[&str]) -> SetFamily {
    letters_family(domain, states)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_sizes() {
        assert_eq!(f_ex().len(), 24);
        assert_eq!(f_ex().domain().len(), 7);
        assert_eq!(g_ex().len(), 7);
        assert_eq!(l_ex().len(), 9);
        assert_eq!(k_ny().len(), 13);
    }
}
