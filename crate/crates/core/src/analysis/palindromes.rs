/// Lengths `L ≥ 1` such that `seq[..L]` is a palindrome, ascending. Linear time.
pub fn palindromic_prefixes<T: Eq>(seq: &[T]) -> Vec<usize> {
    let n = seq.len();
    // odd[i]: radius (centre included) of the longest odd palindrome centred at i
    let mut odd = vec![0usize; n];
    let (mut l, mut r) = (0usize, 0usize); // rightmost palindrome seen is seq[l..r]
    for i in 0..n {
        let mut k = if i >= r {
            1
        } else {
            odd[l + r - 1 - i].min(r - i)
        };
        while i + k < n && i >= k && seq[i - k] == seq[i + k] {
            k += 1;
        }
        odd[i] = k;
        if i + k > r {
            (l, r) = (i + 1 - k, i + k);
        }
    }
    // even[i]: half-length of the longest even palindrome centred between i-1 and i
    let mut even = vec![0usize; n];
    let (mut l, mut r) = (0usize, 0usize);
    for i in 0..n {
        let mut k = if i >= r {
            0
        } else {
            even[l + r - i].min(r - i)
        };
        while i + k < n && i > k && seq[i - k - 1] == seq[i + k] {
            k += 1;
        }
        even[i] = k;
        if i + k > r {
            (l, r) = (i - k, i + k);
        }
    }
    (1..=n)
        .filter(|&len| {
            let c = len / 2;
            if len % 2 == 1 {
                odd[c] > c
            } else {
                even[c] >= c
            }
        })
        .collect()
}
