"""Pure-Python truncated multiplication kernel.

Exponent vectors arrive packed into single integers using mixed-radix
encoding with radix 2*bound+1 per variable, so adding two in-bound keys
never carries between digits.  Candidate products whose per-variable
degree exceeds its bound, or whose degree summed over the capped suffix
exceeds the cap, are dropped.  Coefficients are arbitrary exact numbers
(int or Fraction); exact zeros are removed from the result.
"""


def mul_packed(a_items, b_items, strides, radices, bounds, cap_start, cap_total):
    out = {}
    nv = len(radices)
    for ka, va in a_items:
        for kb, vb in b_items:
            key = ka + kb
            total = 0
            ok = True
            for v in range(nv):
                digit = (key // strides[v]) % radices[v]
                if digit > bounds[v]:
                    ok = False
                    break
                if v >= cap_start:
                    total += digit
            if not ok or (cap_total >= 0 and total > cap_total):
                continue
            if key in out:
                out[key] += va * vb
            else:
                out[key] = va * vb
    return {k: v for k, v in out.items() if v}
