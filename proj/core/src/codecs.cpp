#include "knotwidth/codecs.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "knotwidth/errors.hpp"

namespace knotwidth {

ParseError::ParseError(const std::string& msg, int line, int column)
    : Error(line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg : msg),
      line_(line),
      column_(column) {}

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    bool done() {
        skip();
        return pos_ >= text_.size();
    }
    char peek() {
        skip();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    char take() {
        skip();
        char c = text_[pos_++];
        column_ = column_at(pos_);
        return c;
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        take();
    }
    long number() {
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        if (pos_ - start > 9) fail("number too large");
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }
    [[noreturn]] void fail(const std::string& msg) {
        skip();
        throw ParseError(msg, line_at(pos_), column_at(pos_));
    }
    int line() { return line_at(pos_); }
    int column() { return column_at(pos_); }
    std::size_t pos() const { return pos_; }
    int line_at(std::size_t p) const {
        return 1 + static_cast<int>(std::count(text_.begin(), text_.begin() + std::min(p, text_.size()), '\n'));
    }
    int column_at(std::size_t p) const {
        p = std::min(p, text_.size());
        std::size_t nl = text_.rfind('\n', p == 0 ? 0 : p - 1);
        if (p == 0 || nl == std::string_view::npos) return static_cast<int>(p) + 1;
        return static_cast<int>(p - nl);
    }
    void skip_separators() {
        while (pos_ < text_.size() && (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == ','))
            ++pos_;
    }

private:
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int column_ = 1;
};

struct LabelUse {
    SlotRef slot;
    int line;
    int column;
};

}  // namespace

Diagram parse_pd(std::string_view text) {
    Cursor cur(text);
    Diagram d;
    std::map<long, std::vector<LabelUse>> uses;
    for (cur.skip_separators(); !cur.done(); cur.skip_separators()) {
        char x = cur.peek();
        if (x != 'X' && x != 'x') cur.fail("expected crossing tuple 'X('");
        cur.take();
        char open = cur.peek();
        if (open != '(' && open != '[') cur.fail("expected '(' or '['");
        cur.take();
        const char close = open == '(' ? ')' : ']';
        const int c = d.num_crossings();
        d.crossings.push_back({1});
        for (int k = 0; k < 4; ++k) {
            if (k > 0) cur.expect(',');
            int line = cur.line(), col = cur.column();
            long label = cur.number();
            if (label <= 0) throw ParseError("arc labels must be positive", line, col);
            uses[label].push_back({{c, k}, line, col});
        }
        cur.expect(close);
    }
    if (d.crossings.empty()) return unknot_diagram();
    for (const auto& [label, list] : uses) {
        if (list.size() == 1)
            throw ParseError("label " + std::to_string(label) + " appears once", list[0].line, list[0].column);
        if (list.size() > 2)
            throw ParseError("label " + std::to_string(label) + " appears " + std::to_string(list.size()) +
                                 " times",
                             list[2].line, list[2].column);
        d.arcs.push_back({list[0].slot, list[1].slot});
    }
    ValidationReport r = validate(d);
    if (!r.euler_ok) {
        const auto& first = uses.begin()->second.front();
        std::string msg = "non-planar code";
        for (const auto& p : r.problems) msg += "; " + p;
        msg += " (first label " + std::to_string(uses.begin()->first) + ")";
        throw ParseError(msg, first.line, first.column);
    }
    if (!r.connected) d.split = true;
    return d;
}

std::string emit_pd(const Diagram& d) {
    require_valid(d);
    if (!d.true_vertices.empty()) {
        if (d.crossings.empty() && d.true_vertices.size() == 1 && d.true_vertices[0].degree == 2 &&
            d.num_arcs() == 1)
            return "";
        throw UnsupportedInput("PD code cannot encode true vertices");
    }
    auto at = slot_arcs(d);
    // label[i] numbers arc i along its oriented component; head[i] is the slot the walk enters.
    std::vector<int> label(d.num_arcs(), 0);
    std::vector<SlotRef> head(d.num_arcs());
    int next = 1;
    for (int start = 0; start < d.num_arcs(); ++start) {
        if (label[start]) continue;
        int arc = start;
        SlotRef into = d.arcs[start].b;
        while (!label[arc]) {
            label[arc] = next++;
            head[arc] = into;
            SlotRef out{into.node, (into.slot + 2) % 4};
            arc = at[out.node][out.slot];
            into = partner(d, at, out);
        }
    }
    std::string text;
    for (int c = 0; c < d.num_crossings(); ++c) {
        const int under = (d.crossings[c].over + 1) % 2;
        int in = under;
        const int a0 = at[c][under];
        if (!(head[a0] == SlotRef{c, under})) in = under + 2;
        if (!text.empty()) text += ' ';
        text += "X[";
        for (int k = 0; k < 4; ++k) {
            if (k) text += ',';
            text += std::to_string(label[at[c][(in + k) % 4]]);
        }
        text += ']';
    }
    return text;
}

Diagram parse_gauss(std::string_view text) {
    Cursor cur(text);
    struct Token {
        bool over;
        long id;
        int sign;
        int line, column;
    };
    std::vector<Token> tokens;
    for (cur.skip_separators(); !cur.done(); cur.skip_separators()) {
        int line = cur.line(), col = cur.column();
        char k = cur.take();
        bool over;
        if (k == 'O' || k == 'o')
            over = true;
        else if (k == 'U' || k == 'u')
            over = false;
        else
            throw ParseError("expected 'O' or 'U'", line, col);
        long id = cur.number();
        char s = cur.peek();
        if (s != '+' && s != '-') cur.fail("expected crossing sign '+' or '-'");
        cur.take();
        tokens.push_back({over, id, s == '+' ? 1 : -1, line, col});
    }
    if (tokens.empty()) return unknot_diagram();

    std::map<long, std::vector<int>> where;
    for (std::size_t i = 0; i < tokens.size(); ++i) where[tokens[i].id].push_back(static_cast<int>(i));
    std::map<long, int> index;
    for (const auto& [id, pos] : where) {
        const Token& t0 = tokens[pos[0]];
        if (pos.size() != 2)
            throw ParseError("crossing " + std::to_string(id) + " occurs " + std::to_string(pos.size()) +
                                 " times, expected once over and once under",
                             t0.line, t0.column);
        const Token& t1 = tokens[pos[1]];
        if (t0.over == t1.over)
            throw ParseError("crossing " + std::to_string(id) + " lacks " + (t0.over ? "a U" : "an O") + " token",
                             t1.line, t1.column);
        if (t0.sign != t1.sign) throw ParseError("crossing " + std::to_string(id) + " has inconsistent signs",
                                                 t1.line, t1.column);
        index[id] = static_cast<int>(index.size());
    }

    // Counterclockwise slots: positive (under in, over out, under out, over in),
    // negative (under in, over in, under out, over out).
    Diagram d;
    d.crossings.assign(index.size(), Crossing{1});
    auto slot_of = [&](const Token& t, bool incoming) {
        if (!t.over) return incoming ? 0 : 2;
        if (t.sign > 0) return incoming ? 3 : 1;
        return incoming ? 1 : 3;
    };
    const std::size_t n = tokens.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Token& a = tokens[i];
        const Token& b = tokens[(i + 1) % n];
        d.arcs.push_back({{index[a.id], slot_of(a, false)}, {index[b.id], slot_of(b, true)}});
    }
    ValidationReport r = validate(d);
    if (!r.valid) {
        std::string msg = "code is not realizable as a planar diagram";
        for (const auto& p : r.problems) msg += "; " + p;
        throw ParseError(msg, tokens[0].line, tokens[0].column);
    }
    return d;
}

}  // namespace knotwidth
