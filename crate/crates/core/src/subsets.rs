/// Nonempty proper subsets of `0..d`, ordered by size and then
/// lexicographically.
pub(crate) fn proper_subsets(d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for k in 1..d {
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            out.push(combo.clone());
            // advance to the next k-combination
            let mut i = k;
            while i > 0 && combo[i - 1] == d - k + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            combo[i - 1] += 1;
            for j in i..k {
                combo[j] = combo[j - 1] + 1;
            }
        }
    }
    out
}
