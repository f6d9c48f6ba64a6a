#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eduvis/common.hpp"

namespace eduvis::markup {

// Value-type DOM: small documents, copied freely (the page engine snapshots
// one tree per explored state).
struct Node {
    enum class Type { element, text, comment, doctype };

    Type type = Type::text;
    std::string tag;   // lowercased; elements only
    std::string text;  // text / comment / doctype payload
    std::vector<std::pair<std::string, std::string>> attrs;
    std::vector<Node> children;

    const std::string* attr(const std::string& name) const;
    bool has_attr(const std::string& name) const;
    void set_attr(const std::string& name, const std::string& value);
    void remove_attr(const std::string& name);

    static Node element(std::string tag_name) {
        Node n;
        n.type = Type::element;
        n.tag = std::move(tag_name);
        return n;
    }
    static Node text_node(std::string content) {
        Node n;
        n.type = Type::text;
        n.text = std::move(content);
        return n;
    }
};

struct Document {
    std::vector<Node> roots;

    Node* root_element();
    const Node* root_element() const;
};

struct ParseOptions {
    // strict: unbalanced or stray tags throw instead of being repaired.
    bool strict = false;
};

// Tolerant by default: unknown entities pass through, unclosed elements are
// closed at end of input, stray close tags are dropped.
Document parse(const std::string& text, const ParseOptions& options = {});

bool is_void_element(const std::string& tag);

// Structural well-formedness for a whole document string: balanced markup
// (strict parse) and exactly one element root with the given tag; doctype,
// comments, and whitespace may surround it. Not a standards validator.
bool well_formed_document(const std::string& text, const std::string& root_tag,
                          std::string* reason = nullptr);

std::string serialize(const Node& node);
std::string serialize(const Document& doc);

// Pre-order traversal over elements; return false from the visitor to prune
// the subtree.
void walk(const Node& node, const std::function<bool(const Node&)>& visit);
void walk(Node& node, const std::function<bool(Node&)>& visit);

Node* find_by_id(Document& doc, const std::string& id);
const Node* find_by_id(const Document& doc, const std::string& id);

std::vector<const Node*> collect(const Document& doc,
                                 const std::function<bool(const Node&)>& predicate);

// Concatenated text content of a subtree with whitespace runs collapsed.
std::string text_content(const Node& node);

std::string escape_text(const std::string& text);
std::string escape_attr(const std::string& value);

// References that leave the document: http(s):// or protocol-relative //
// values in src/href/action/poster/srcset attributes, plus url(...) and
// @import targets inside style attributes and <style> content. Empty means
// the document is self-contained.
std::vector<std::string> external_references(const Document& doc);

}  // namespace eduvis::markup
