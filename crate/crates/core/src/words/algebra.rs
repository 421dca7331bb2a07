//! The word algebra: rotations, periods, primitivity, Lyndon recognition.
//!
//! Everything here is generic over the letter type; the election code uses it
//! with composite letters whose ordering encodes the election priorities.

/// The j-th rotation of a word, 1-indexed: `rotate(w, 1) == w`.
///
/// The empty word rotates to itself; otherwise `j` must lie in `1..=len`.
pub fn rotate<L: Clone>(word: &[L], j: usize) -> Vec<L> {
    if word.is_empty() {
        return Vec::new();
    }
    assert!(
        (1..=word.len()).contains(&j),
        "rotation index {j} out of range 1..={}",
        word.len()
    );
    let split = j - 1;
    word[split..].iter().chain(word[..split].iter()).cloned().collect()
}

/// Smallest period `p` of a nonempty word: the least `p` with
/// `word[i] == word[i + p]` for all valid `i`. `p == len` means the word has
/// no repetition structure at all.
pub fn smallest_period<L: PartialEq>(word: &[L]) -> usize {
    assert!(!word.is_empty(), "smallest_period of empty word");
    let n = word.len();
    // failure function: border[i] = longest proper border of word[..=i]
    let mut border = vec![0usize; n];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && word[i] != word[k] {
            k = border[k - 1];
        }
        if word[i] == word[k] {
            k += 1;
        }
        border[i] = k;
    }
    n - border[n - 1]
}

/// A word is primitive when it is not a proper power `v^k`, `k > 1`.
///
/// Panics on the empty word, which is neither primitive nor a power.
pub fn is_primitive<L: PartialEq>(word: &[L]) -> bool {
    assert!(!word.is_empty(), "is_primitive of empty word");
    let p = smallest_period(word);
    p == word.len() || word.len() % p != 0
}

/// Duval's factorization into Lyndon factors `w = w1 w2 … wk` with
/// `w1 ≥ w2 ≥ … ≥ wk`, in linear time.
pub fn lyndon_factorization<L: Ord>(word: &[L]) -> Vec<&[L]> {
    let n = word.len();
    let mut factors = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && word[k] <= word[j] {
            if word[k] < word[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            factors.push(&word[i..i + j - k]);
            i += j - k;
        }
    }
    factors
}

/// A word is a Lyndon word when it is nonempty, primitive and strictly
/// smaller than every one of its nontrivial rotations. The empty word is not
/// a Lyndon word.
pub fn is_lyndon<L: Ord>(word: &[L]) -> bool {
    !word.is_empty() && lyndon_factorization(word).len() == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn first_rotation_is_identity() {
        assert_eq!(rotate(b"abc", 1), b"abc".to_vec());
    }

    #[test]
    fn second_rotation_of_pair_swaps() {
        assert_eq!(rotate(b"ab", 2), b"ba".to_vec());
    }

    #[test]
    fn empty_word_rotates_to_itself() {
        assert_eq!(rotate::<u8>(&[], 5), Vec::<u8>::new());
    }

    #[test]
    #[should_panic(expected = "rotation index")]
    fn out_of_range_rotation_panics() {
        rotate(b"abc", 4);
    }

    #[test]
    fn primitivity_examples() {
        assert!(!is_primitive(b"abab")); // (ab)^2
        assert!(is_primitive(b"aab"));
        assert!(is_primitive(b"a"));
        assert!(is_primitive(b"aba"));
        assert!(!is_primitive(b"aaaa"));
    }

    #[test]
    #[should_panic(expected = "empty word")]
    fn primitivity_rejects_empty() {
        is_primitive::<u8>(&[]);
    }

    #[test]
    fn lyndon_examples() {
        for w in [&b"a"[..], b"b", b"ab", b"aab", b"abb"] {
            assert!(is_lyndon(w), "{:?} should be Lyndon", w);
        }
        assert!(!is_lyndon(b"aba")); // not minimal: aab < aba
        assert!(!is_lyndon(b"abab")); // not primitive
        assert!(!is_lyndon::<u8>(&[])); // nonempty required
        assert!(!is_lyndon(b"ba"));
    }

    #[test]
    fn factorization_example() {
        let parts: Vec<&[u8]> = lyndon_factorization(b"bbbbabracadabra");
        let expected: Vec<&[u8]> = vec![b"b", b"b", b"b", b"b", b"abracad", b"abr", b"a"];
        assert_eq!(parts, expected);
    }

    // Definition-based oracles, kept independent of the linear-time paths.
    fn is_lyndon_brute(w: &[u8]) -> bool {
        if w.is_empty() {
            return false;
        }
        (2..=w.len()).all(|j| {
            let rot: Vec<u8> = w[j - 1..].iter().chain(w[..j - 1].iter()).copied().collect();
            w < &rot[..]
        })
    }

    fn is_primitive_brute(w: &[u8]) -> bool {
        for p in 1..w.len() {
            if w.len() % p == 0 && w.chunks(p).all(|c| c == &w[..p]) {
                return false;
            }
        }
        true
    }

    proptest! {
        #[test]
        fn lyndon_matches_definition(w in proptest::collection::vec(0u8..4, 1..32)) {
            prop_assert_eq!(is_lyndon(&w), {
                let bytes: Vec<u8> = w.clone();
                is_lyndon_brute(&bytes)
            });
        }

        #[test]
        fn primitivity_matches_divisor_check(w in proptest::collection::vec(0u8..4, 1..32)) {
            prop_assert_eq!(is_primitive(&w), is_primitive_brute(&w));
        }

        // rotation preserves primitivity
        #[test]
        fn rotation_preserves_primitivity(
            w in proptest::collection::vec(0u8..4, 1..32),
            j in 1usize..32,
        ) {
            let j = 1 + (j - 1) % w.len();
            prop_assert_eq!(is_primitive(&w), is_primitive(&rotate(&w, j)));
        }
    }
}
