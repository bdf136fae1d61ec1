"""Bipartite post/user like-graph data model.

A ``LikeGraph`` is immutable once built. Posts and users are addressed by
opaque string ids externally and by dense integer indices internally; the
index assignment is ascending-lexicographic over the ids, and adjacency is
kept sorted ascending, so identical inputs (in any order) always produce the
identical graph. Float reductions elsewhere in the package rely on that
ordering for bitwise reproducibility.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from .errors import DuplicatePostId, UnknownPostId


class Label(Enum):
    HOAX = "hoax"
    NONHOAX = "nonhoax"

    @classmethod
    def from_string(cls, text: str) -> "Label":
        if text == "hoax":
            return cls.HOAX
        if text == "nonhoax":
            return cls.NONHOAX
        raise ValueError(f"invalid label {text!r}")


@dataclass(frozen=True)
class Post:
    post_id: str
    page_id: str
    label: Label


@dataclass(frozen=True)
class Component:
    """One connected component: ascending post ids and user ids."""

    posts: tuple
    users: tuple


class LikeGraph:
    """Immutable bipartite graph of posts, users and like edges.

    Attributes (all numpy arrays are read-only):
      post_ids     post id per post index, ascending
      pages        distinct page ids, ascending
      post_pages   page index per post
      post_hoax    True where the post's ground truth is hoax
      user_ids     user id per user index, ascending
      like_posts / like_users
                   one entry per like, sorted by (post, user)
      ub_posts / ub_users
                   the same likes sorted by (user, post)
      post_indptr / user_indptr
                   CSR-style offsets into the two edge orderings
    """

    def __init__(self, post_ids, post_pages, pages, post_hoax,
                 user_ids, like_posts, like_users,
                 ub_posts, ub_users, post_indptr, user_indptr):
        self.post_ids = post_ids
        self.post_pages = post_pages
        self.pages = pages
        self.post_hoax = post_hoax
        self.user_ids = user_ids
        self.like_posts = like_posts
        self.like_users = like_users
        self.ub_posts = ub_posts
        self.ub_users = ub_users
        self.post_indptr = post_indptr
        self.user_indptr = user_indptr
        for arr in (post_ids, post_pages, pages, post_hoax, user_ids,
                    like_posts, like_users, ub_posts, ub_users,
                    post_indptr, user_indptr):
            arr.flags.writeable = False
        self._post_index = None
        self._user_index = None

    @property
    def n_posts(self) -> int:
        return len(self.post_ids)

    @property
    def n_users(self) -> int:
        return len(self.user_ids)

    @property
    def n_likes(self) -> int:
        return len(self.like_posts)

    def post_index(self) -> dict:
        if self._post_index is None:
            self._post_index = {pid: i for i, pid in enumerate(self.post_ids)}
        return self._post_index

    def user_index(self) -> dict:
        if self._user_index is None:
            self._user_index = {uid: i for i, uid in enumerate(self.user_ids)}
        return self._user_index

    def post_idx(self, post_id: str) -> int:
        try:
            return self.post_index()[post_id]
        except KeyError:
            raise UnknownPostId(post_id) from None

    def label_of(self, post_id: str) -> Label:
        return Label.HOAX if self.post_hoax[self.post_idx(post_id)] else Label.NONHOAX

    def post_neighbors(self, post: int) -> np.ndarray:
        """User indices liking the post, ascending."""
        return self.like_users[self.post_indptr[post]:self.post_indptr[post + 1]]

    def user_neighbors(self, user: int) -> np.ndarray:
        """Post indices liked by the user, ascending."""
        return self.ub_posts[self.user_indptr[user]:self.user_indptr[user + 1]]

    def truth_by_id(self) -> dict:
        return {pid: (Label.HOAX if h else Label.NONHOAX)
                for pid, h in zip(self.post_ids, self.post_hoax)}

    def page_of_post_idx(self, post: int) -> str:
        return str(self.pages[self.post_pages[post]])

    def induced_subgraph(self, post_ids: Iterable[str]) -> "LikeGraph":
        """Subgraph of the given posts, their likes, and the induced users."""
        index = self.post_index()
        keep = np.zeros(self.n_posts, dtype=bool)
        for pid in post_ids:
            if pid not in index:
                raise UnknownPostId(pid, "induced_subgraph")
            keep[index[pid]] = True
        post_sel = np.flatnonzero(keep)
        edge_mask = keep[self.like_posts]
        sub_posts_old = self.like_posts[edge_mask]
        sub_users_old = self.like_users[edge_mask]
        new_post_of_old = np.full(self.n_posts, -1, dtype=np.int64)
        new_post_of_old[post_sel] = np.arange(len(post_sel))
        kept_users = np.unique(sub_users_old)
        new_user_of_old = np.full(self.n_users, -1, dtype=np.int64)
        new_user_of_old[kept_users] = np.arange(len(kept_users))
        return _assemble(
            self.post_ids[post_sel],
            self.pages[self.post_pages[post_sel]],
            self.post_hoax[post_sel].copy(),
            new_post_of_old[sub_posts_old],
            new_user_of_old[sub_users_old],
            self.user_ids[kept_users],
        )


def _assemble(post_ids, page_ids, post_hoax, like_posts, like_users, user_ids) -> LikeGraph:
    """Assemble a graph from index-level arrays.

    Preconditions (caller's responsibility): post_ids and user_ids ascending
    and unique, likes deduplicated, every user index present in like_users.
    """
    n_posts = len(post_ids)
    n_users = len(user_ids)
    like_posts = np.asarray(like_posts, dtype=np.int64)
    like_users = np.asarray(like_users, dtype=np.int64)

    order = np.lexsort((like_users, like_posts))
    like_posts = like_posts[order]
    like_users = like_users[order]
    order_u = np.lexsort((like_posts, like_users))
    ub_posts = like_posts[order_u]
    ub_users = like_users[order_u]

    post_indptr = np.zeros(n_posts + 1, dtype=np.int64)
    np.cumsum(np.bincount(like_posts, minlength=n_posts), out=post_indptr[1:])
    user_indptr = np.zeros(n_users + 1, dtype=np.int64)
    np.cumsum(np.bincount(like_users, minlength=n_users), out=user_indptr[1:])

    pages, post_pages = np.unique(np.asarray(page_ids), return_inverse=True)
    post_pages = post_pages.astype(np.int32)

    return LikeGraph(
        post_ids=np.asarray(post_ids),
        post_pages=post_pages,
        pages=pages,
        post_hoax=np.asarray(post_hoax, dtype=bool),
        user_ids=np.asarray(user_ids),
        like_posts=like_posts,
        like_users=like_users,
        ub_posts=ub_posts,
        ub_users=ub_users,
        post_indptr=post_indptr,
        user_indptr=user_indptr,
    )


def build_graph(posts: Sequence[Post], likes: Sequence[tuple]) -> LikeGraph:
    """Build a LikeGraph from post records and (post_id, user_id) pairs.

    Duplicate likes are dropped; the user set is induced from the likes.
    Raises UnknownPostId when a like references an undeclared post and
    DuplicatePostId when two records share a post id.
    """
    raw_pids = np.array([p.post_id for p in posts], dtype=object)
    uniq, counts = np.unique(raw_pids.astype(str) if len(raw_pids) else raw_pids, return_counts=True) \
        if len(raw_pids) else (np.array([], dtype=str), np.array([], dtype=np.int64))
    if len(uniq) and counts.max() > 1:
        raise DuplicatePostId(str(uniq[np.argmax(counts > 1)]))

    order = np.argsort(raw_pids.astype(str)) if len(raw_pids) else np.array([], dtype=np.int64)
    post_ids = np.array([posts[i].post_id for i in order], dtype=str)
    page_ids = np.array([posts[i].page_id for i in order], dtype=str)
    post_hoax = np.array([posts[i].label is Label.HOAX for i in order], dtype=bool)

    if likes:
        like_pid = np.array([pid for pid, _ in likes], dtype=str)
        like_uid = np.array([uid for _, uid in likes], dtype=str)
        pos = np.searchsorted(post_ids, like_pid)
        bad = (pos >= len(post_ids)) | (post_ids[np.minimum(pos, len(post_ids) - 1)] != like_pid) \
            if len(post_ids) else np.ones(len(like_pid), dtype=bool)
        if bad.any():
            k = int(np.flatnonzero(bad)[0])
            raise UnknownPostId(str(like_pid[k]), f"liked by {like_uid[k]}")
        user_ids, like_u = np.unique(like_uid, return_inverse=True)
        like_p = pos.astype(np.int64)
        like_u = like_u.astype(np.int64)
        # dedup via combined key; unique also yields canonical (post, user) order
        key = like_p * len(user_ids) + like_u
        key = np.unique(key)
        like_p = key // len(user_ids)
        like_u = key % len(user_ids)
    else:
        user_ids = np.array([], dtype=str)
        like_p = np.array([], dtype=np.int64)
        like_u = np.array([], dtype=np.int64)

    return _assemble(post_ids, page_ids, post_hoax, like_p, like_u, user_ids)


def connected_components(g: LikeGraph) -> list:
    """Connected components of the bipartite graph, each with ascending post
    and user id tuples, ordered by smallest contained post id."""
    n = g.n_posts + g.n_users
    parent = list(range(n))

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    offset = g.n_posts
    for p, u in zip(g.like_posts.tolist(), (g.like_users + offset).tolist()):
        rp, ru = find(p), find(u)
        if rp != ru:
            if rp < ru:
                parent[ru] = rp
            else:
                parent[rp] = ru

    groups: dict = {}
    for i in range(g.n_posts):
        groups.setdefault(find(i), ([], []))[0].append(str(g.post_ids[i]))
    for u in range(g.n_users):
        groups.setdefault(find(offset + u), ([], []))[1].append(str(g.user_ids[u]))

    comps = [Component(posts=tuple(ps), users=tuple(us)) for ps, us in groups.values()]
    comps.sort(key=lambda c: c.posts[0])
    return comps
