"""Left rotation lambda and right rotation rho on integer sequences.

Sequences are tuples of ints with at most one even entry.  rho and its
inverse accept negative entries; lambda acts on projective characteristic
sequences only.
"""


class NotProjective(ValueError):
    pass


class TooShort(ValueError):
    pass


def _even_positions(z):
    return [i for i, x in enumerate(z) if x % 2 == 0]


def lambda_rot(z):
    z = tuple(z)
    if len(z) < 2:
        raise TooShort(f"lambda needs length >= 2, got {z}")
    if min(z) < 0 or [z[i] for i in _even_positions(z)] != [0]:
        raise NotProjective(f"{z} is not a projective characteristic sequence")
    *head, last = z
    if last == 0:
        return (0, *head)
    if last == 1:
        return tuple(head)
    # the z_0 entry is kept, so the result has the length of z
    return (last - 2, *head)


def rho(z):
    z = tuple(z)
    if len(z) == 1:
        return (z[0] + 1,)
    first, rest = z[0], z[1:]
    for k, x in enumerate(rest):
        if x % 2 == 0:
            return rest[:k] + (first + 1,) + rest[k + 1:] + (x + 1,)
    return rest + (first + 1,)


def rho_inv(z):
    z = tuple(z)
    *head, last = z
    for k, x in enumerate(head):
        if x % 2 == 0:
            return (x - 1,) + tuple(head[:k]) + (last - 1,) + tuple(head[k + 1:])
    return (last - 1, *head)


def rho_pow(z, k):
    z = tuple(z)
    q, r = divmod(k, len(z) + 1)
    for _ in range(r):
        z = rho(z)
    return tuple(x + 2 * q for x in z)
