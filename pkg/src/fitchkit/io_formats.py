"""Interchange formats: labeled-Newick trees and JSON documents.

Tree grammar (whitespace between tokens is insignificant):

    tree         := subtree ";"
    subtree      := leafname | "(" subtree_edge ("," subtree_edge)+ ")"
    subtree_edge := subtree ":" "{" colorlist? "}"
    colorlist    := color ("," color)*

Every non-root subtree carries the label of the edge to its parent; the
root carries none.  Names are any run of characters free of whitespace and
of ``(){},:;``.  Printing is canonical: children ordered by the smallest
leaf name below them, color lists sorted, so parse and print are mutually
inverse on canonical text.

Maps, set families and recoloring schemes travel as small JSON documents;
pairs absent from a map document have the empty color set.
"""

import json

from .derive import RecoloringScheme
from .errors import (
    DuplicateEntry,
    ParseError,
    SelfPair,
    UnknownName,
)
from .model import EdgeLabeledTree, FitchMap, SetFamily, RESERVED_CHARS


class _TreeParser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self._skip_ws()
        if self.pos < len(self.text):
            return self.text[self.pos]
        return None

    def expect(self, ch):
        got = self.peek()
        if got != ch:
            raise ParseError(self.pos, "'%s'" % ch, got)
        self.pos += 1

    def token(self, expected):
        got = self.peek()
        start = self.pos
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch.isspace() or ch in RESERVED_CHARS:
                break
            self.pos += 1
        if self.pos == start:
            raise ParseError(start, expected, got)
        return self.text[start:self.pos]

    def label(self):
        self.expect(":")
        self.expect("{")
        label = []
        if self.peek() != "}":
            label.append(self.token("a color name"))
            while self.peek() == ",":
                self.pos += 1
                label.append(self.token("a color name"))
        self.expect("}")
        return label

    def subtree(self):
        # Iterative so that deeply nested trees cannot overflow the
        # interpreter stack; ``open_groups`` holds the edge lists of every
        # unclosed "(".
        open_groups = []
        while True:
            while self.peek() == "(":
                self.pos += 1
                open_groups.append([])
            node = ("leaf", self.token("a leaf name or '('"))
            while True:
                if not open_groups:
                    return node
                open_groups[-1].append((node, self.label()))
                got = self.peek()
                if got == ",":
                    self.pos += 1
                    break
                if got == ")":
                    if len(open_groups[-1]) < 2:
                        raise ParseError(self.pos, "','", got)
                    self.pos += 1
                    node = ("inner", open_groups.pop())
                    continue
                raise ParseError(self.pos, "',' or ')'", got)


def parse_tree(text):
    """Parse labeled-Newick text into an edge-labeled tree.

    Leaf order follows first appearance; the color universe is the sorted
    set of colors seen in labels.
    """
    parser = _TreeParser(text)
    node = parser.subtree()
    parser.expect(";")
    if parser.peek() is not None:
        raise ParseError(parser.pos, "end of input", parser.text[parser.pos])

    parents = []
    names = {}
    labels = {}
    leaf_order = []
    colors = set()
    work = [(node, -1, None)]
    while work:
        (kind, payload), parent, label = work.pop()
        v = len(parents)
        parents.append(parent)
        if label is not None:
            labels[v] = label
            colors.update(label)
        if kind == "leaf":
            names[v] = payload
            leaf_order.append(payload)
        else:
            for child, child_label in reversed(payload):
                work.append((child, v, child_label))
    return EdgeLabeledTree(
        sorted(colors), parents, names, labels=labels, leaf_order=leaf_order
    )


def print_tree(tree):
    """Canonical labeled-Newick text for ``tree``, newline-free."""
    out = []
    stack = [("enter", tree.root)]
    while stack:
        op, v = stack.pop()
        if op == "sep":
            out.append(",")
            continue
        if op == "exit":
            out.append(")")
        elif tree.is_leaf(v):
            out.append(tree.name_of(v))
        else:
            out.append("(")
            stack.append(("exit", v))
            kids = tree.children(v)
            for i in range(len(kids) - 1, -1, -1):
                stack.append(("enter", kids[i]))
                if i > 0:
                    stack.append(("sep", None))
            continue
        if v != tree.root:
            out.append(":{%s}" % ",".join(sorted(tree.label(v))))
    return "".join(out) + ";"


def _load_json(text, expected):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.pos, expected) from None
    return doc


def _string_list(doc, key, where):
    value = doc.get(key)
    if not isinstance(value, list) or not all(isinstance(s, str) for s in value):
        raise ParseError(0, "key %r holding a list of strings in %s" % (key, where))
    return value


def parse_map(text):
    """Parse a JSON map document: leaves, colors, entries with from/to/colors."""
    doc = _load_json(text, "a JSON map document")
    if not isinstance(doc, dict):
        raise ParseError(0, "a JSON object with leaves, colors and entries")
    leaves = _string_list(doc, "leaves", "a map document")
    colors = _string_list(doc, "colors", "a map document")
    records = doc.get("entries", [])
    if not isinstance(records, list):
        raise ParseError(0, "key 'entries' holding a list of records")

    known_leaves = set(leaves)
    known_colors = set(colors)
    entries = {}
    for record in records:
        if not isinstance(record, dict):
            raise ParseError(0, "an entry record with from, to and colors")
        src = record.get("from")
        dst = record.get("to")
        ms = record.get("colors")
        if not isinstance(src, str) or not isinstance(dst, str):
            raise ParseError(0, "string 'from' and 'to' in every entry")
        if not isinstance(ms, list) or not all(isinstance(m, str) for m in ms):
            raise ParseError(0, "a string list 'colors' in every entry")
        if src not in known_leaves:
            raise UnknownName("entry names undeclared leaf %r" % (src,))
        if dst not in known_leaves:
            raise UnknownName("entry names undeclared leaf %r" % (dst,))
        if src == dst:
            raise SelfPair("entry on pair (%r, %r)" % (src, dst))
        if (src, dst) in entries:
            raise DuplicateEntry("pair (%r, %r) listed twice" % (src, dst))
        for m in ms:
            if m not in known_colors:
                raise UnknownName("entry names undeclared color %r" % (m,))
        entries[(src, dst)] = ms
    return FitchMap(leaves, colors, entries)


def print_map(fmap):
    """Canonical JSON text: entries in leaf-pair order, colors name-sorted."""
    entries = []
    nonempty = fmap.entries()
    for xi, x in enumerate(fmap.leaves):
        for yi, y in enumerate(fmap.leaves):
            if xi == yi:
                continue
            ms = nonempty.get((x, y))
            if ms:
                entries.append({"from": x, "to": y, "colors": sorted(ms)})
    doc = {
        "leaves": list(fmap.leaves),
        "colors": list(fmap.colors),
        "entries": entries,
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_set_family(text):
    """Parse a JSON set family: universe plus a list of member lists."""
    doc = _load_json(text, "a JSON set family document")
    if not isinstance(doc, dict):
        raise ParseError(0, "a JSON object with universe and members")
    universe = _string_list(doc, "universe", "a set family document")
    members = doc.get("members")
    if not isinstance(members, list) or not all(
        isinstance(member, list) and all(isinstance(x, str) for x in member)
        for member in members
    ):
        raise ParseError(0, "key 'members' holding a list of string lists")
    return SetFamily(universe, members)


def print_set_family(family):
    """Canonical JSON text: members in family order, elements sorted."""
    doc = {
        "universe": list(family.universe),
        "members": [sorted(member) for member in family.members],
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_scheme(text):
    """Parse a JSON recoloring scheme: parts, optional output_colors/partition."""
    doc = _load_json(text, "a JSON recoloring scheme")
    if not isinstance(doc, dict):
        raise ParseError(0, "a JSON object with parts")
    parts = doc.get("parts")
    if not isinstance(parts, list) or not all(
        isinstance(part, list) and all(isinstance(m, str) for m in part)
        for part in parts
    ):
        raise ParseError(0, "key 'parts' holding a list of string lists")
    output_colors = doc.get("output_colors")
    if output_colors is not None and (
        not isinstance(output_colors, list)
        or not all(isinstance(m, str) for m in output_colors)
    ):
        raise ParseError(0, "key 'output_colors' holding a list of strings")
    partition = doc.get("partition", False)
    if not isinstance(partition, bool):
        raise ParseError(0, "key 'partition' holding a boolean")
    return RecoloringScheme(parts, output_colors=output_colors, partition=partition)
