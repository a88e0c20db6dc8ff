#include "hpnet/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace hpnet {

namespace {

// ---------------------------------------------------------------- lexing

enum class Tok {
  ident, number, string,
  lbrace, rbrace, semi, comma, lparen, rparen, lbracket, rbracket, equals, arrow,
  eof, bad,
};

struct Token {
  Tok kind = Tok::bad;
  std::string text;
  std::int64_t value = 0;
  int line = 1;
  int col = 1;
};

constexpr std::int64_t kMaxNumber = 1'000'000'000'000'000;  // 1e15

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}

struct Lexer {
  const std::string& src;
  std::vector<Diagnostic>& diags;
  std::size_t i = 0;
  int line = 1, col = 1;
  std::vector<Token> out;

  Lexer(const std::string& s, std::vector<Diagnostic>& d) : src(s), diags(d) {}

  void error(const std::string& code, const std::string& msg, int l, int c) {
    diags.push_back({Diagnostic::Severity::error, code, msg, l, c});
  }

  char cur() const { return src[i]; }
  bool done() const { return i >= src.size(); }

  void advance() {
    if (src[i] == '\n') {
      line++;
      col = 1;
    } else {
      col++;
    }
    i++;
  }

  // Structural UTF-8 check; other encodings are rejected up front.
  bool validate_utf8() {
    int l = 1, c = 1;
    for (std::size_t k = 0; k < src.size();) {
      unsigned char b = static_cast<unsigned char>(src[k]);
      int len = 0;
      if (b < 0x80) len = 1;
      else if ((b & 0xE0) == 0xC0) len = 2;
      else if ((b & 0xF0) == 0xE0) len = 3;
      else if ((b & 0xF8) == 0xF0) len = 4;
      else {
        error("ENCODING", "input is not valid UTF-8", l, c);
        return false;
      }
      for (int j = 1; j < len; j++) {
        if (k + j >= src.size() ||
            (static_cast<unsigned char>(src[k + j]) & 0xC0) != 0x80) {
          error("ENCODING", "input is not valid UTF-8", l, c);
          return false;
        }
      }
      if (src[k] == '\n') {
        l++;
        c = 1;
      } else {
        c++;
      }
      k += len;
    }
    return true;
  }

  std::vector<Token> run() {
    if (!validate_utf8()) return {{Tok::eof, "", 0, line, col}};
    while (!done()) {
      const int tl = line, tc = col;
      char ch = cur();
      if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
        advance();
        continue;
      }
      if (ch == '#') {  // comment to end of line
        while (!done() && cur() != '\n') advance();
        continue;
      }
      if (ident_start(ch)) {
        std::string text;
        while (!done() && ident_char(cur())) {
          text += cur();
          advance();
        }
        out.push_back({Tok::ident, text, 0, tl, tc});
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::string text;
        while (!done() && std::isdigit(static_cast<unsigned char>(cur()))) {
          text += cur();
          advance();
        }
        std::int64_t value = 0;
        bool overflow = text.size() > 16;
        if (!overflow) value = std::stoll(text);
        if (overflow || value > kMaxNumber) {
          error("NUMBER_RANGE", "number " + text + " is out of range", tl, tc);
          value = 0;
        }
        out.push_back({Tok::number, text, value, tl, tc});
        continue;
      }
      if (ch == '"') {
        advance();
        std::string text;
        bool closed = false;
        while (!done()) {
          if (cur() == '"') {
            advance();
            closed = true;
            break;
          }
          if (cur() == '\n') break;
          text += cur();
          advance();
        }
        if (!closed)
          error("UNTERMINATED_STRING", "string literal is not terminated", tl, tc);
        out.push_back({Tok::string, text, 0, tl, tc});
        continue;
      }
      if (ch == '-') {
        advance();
        if (!done() && cur() == '>') {
          advance();
          out.push_back({Tok::arrow, "->", 0, tl, tc});
        } else {
          error("LEX_CHAR", "stray '-' (negative numbers are not allowed)", tl, tc);
        }
        continue;
      }
      Tok kind = Tok::bad;
      switch (ch) {
        case '{': kind = Tok::lbrace; break;
        case '}': kind = Tok::rbrace; break;
        case ';': kind = Tok::semi; break;
        case ',': kind = Tok::comma; break;
        case '(': kind = Tok::lparen; break;
        case ')': kind = Tok::rparen; break;
        case '[': kind = Tok::lbracket; break;
        case ']': kind = Tok::rbracket; break;
        case '=': kind = Tok::equals; break;
        default: break;
      }
      if (kind == Tok::bad) {
        error("LEX_CHAR", std::string("unexpected character '") + ch + "'", tl, tc);
        advance();
        continue;
      }
      out.push_back({kind, std::string(1, ch), 0, tl, tc});
      advance();
    }
    out.push_back({Tok::eof, "", 0, line, col});
    return out;
  }
};

const std::set<std::string> kReserved = {
    "net", "place", "trans", "arc", "entry", "exit", "guard",
    "tc", "td", "refine", "refinable", "pre", "post", "inf"};

// ---------------------------------------------------------------- parsing

struct Parser {
  std::vector<Token> toks;
  std::size_t pos = 0;
  std::vector<Diagnostic>& diags;

  Parser(std::vector<Token> t, std::vector<Diagnostic>& d)
      : toks(std::move(t)), diags(d) {}

  const Token& peek() const { return toks[pos]; }
  const Token& get() { return toks[pos == toks.size() - 1 ? pos : pos++]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_kw(const char* kw) const {
    return peek().kind == Tok::ident && peek().text == kw;
  }
  bool accept(Tok k) {
    if (!at(k)) return false;
    get();
    return true;
  }
  bool accept_kw(const char* kw) {
    if (!at_kw(kw)) return false;
    get();
    return true;
  }

  void error(const std::string& code, const std::string& msg, const Token& t) {
    diags.push_back({Diagnostic::Severity::error, code, msg, t.line, t.col});
  }
  void warn(const std::string& code, const std::string& msg, const Token& t) {
    diags.push_back({Diagnostic::Severity::warning, code, msg, t.line, t.col});
  }

  bool had_errors() const {
    return std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) {
      return d.severity == Diagnostic::Severity::error;
    });
  }

  // interval := "[" NAT "," (NAT | "inf") "]"
  std::optional<TimeInterval> parse_interval() {
    const Token& open = peek();
    if (!accept(Tok::lbracket)) {
      error("EXPECTED_INTERVAL", "expected '[' to start an interval", open);
      return std::nullopt;
    }
    if (!at(Tok::number)) {
      if (at_kw("inf"))
        error("INTERVAL_INF_LOWER", "'inf' is only legal as an upper bound", peek());
      else
        error("EXPECTED_NUMBER", "expected a number for the lower bound", peek());
      return std::nullopt;
    }
    std::int64_t lo = get().value;
    if (!accept(Tok::comma)) {
      error("EXPECTED_COMMA", "expected ',' inside interval", peek());
      return std::nullopt;
    }
    std::int64_t hi = 0;
    if (at(Tok::number)) {
      hi = get().value;
    } else if (accept_kw("inf")) {
      hi = TimeInterval::kUnbounded;
    } else {
      error("EXPECTED_NUMBER", "expected a number or 'inf' for the upper bound", peek());
      return std::nullopt;
    }
    if (!accept(Tok::rbracket)) {
      error("EXPECTED_RBRACKET", "expected ']' to close the interval", peek());
      return std::nullopt;
    }
    if (lo > hi) {
      error("INTERVAL_ORDER",
            "interval [" + std::to_string(lo) + "," +
                (hi == TimeInterval::kUnbounded ? std::string("inf") : std::to_string(hi)) +
                "] has lo > hi",
            open);
      return std::nullopt;
    }
    return TimeInterval{lo, hi};
  }
};

struct PendingArc {
  NodeId source, target;
  Token source_tok, target_tok;
};

struct PendingBinding {
  std::string owner;  // net name
  NodeId transition;
  std::string target;
  Token target_tok;
};

struct NetParser : Parser {
  using Parser::Parser;

  HierarchicalNet doc;
  std::vector<PendingBinding> bindings;
  bool first_net = true;

  void skip_item() {
    while (!at(Tok::eof) && !at(Tok::semi) && !at(Tok::rbrace)) get();
    accept(Tok::semi);
  }
  void skip_net() {
    while (!at(Tok::eof) && !at_kw("net")) get();
  }

  std::optional<NodeId> parse_node_id() {
    if (!at(Tok::ident)) {
      error("EXPECTED_IDENT", "expected an identifier", peek());
      return std::nullopt;
    }
    if (kReserved.count(peek().text)) {
      error("RESERVED_WORD", "'" + peek().text + "' is a reserved word", peek());
      return std::nullopt;
    }
    return get().text;
  }

  std::optional<std::set<std::string>> parse_label_set() {
    if (!accept(Tok::lbrace)) {
      error("EXPECTED_LBRACE", "expected '{' to start a label set", peek());
      return std::nullopt;
    }
    std::set<std::string> labels;
    if (!at(Tok::rbrace)) {
      do {
        auto id = parse_node_id();
        if (!id) return std::nullopt;
        labels.insert(*id);
      } while (accept(Tok::comma));
    }
    if (!accept(Tok::rbrace)) {
      error("EXPECTED_RBRACE", "expected '}' to close the label set", peek());
      return std::nullopt;
    }
    return labels;
  }

  void parse_document() {
    if (at(Tok::eof)) {
      error("EXPECTED_NET", "document contains no net definition", peek());
      return;
    }
    while (!at(Tok::eof)) {
      if (!at_kw("net")) {
        error("EXPECTED_NET", "expected 'net'", peek());
        skip_net();
        continue;
      }
      parse_netdef();
    }
    resolve_bindings();
  }

  void parse_netdef() {
    get();  // 'net'
    if (!at(Tok::ident) || kReserved.count(peek().text)) {
      error("EXPECTED_IDENT", "expected a net name", peek());
      skip_net();
      return;
    }
    const Token name_tok = get();
    const std::string name = name_tok.text;
    const bool duplicate =
        (!first_net && (name == doc.root_name || doc.subnets.count(name)));
    if (duplicate)
      error("DUPLICATE_NET", "net '" + name + "' is already defined", name_tok);

    if (!accept(Tok::lbrace)) {
      error("EXPECTED_LBRACE", "expected '{' after net name", peek());
      skip_net();
      return;
    }

    NetDef def;
    std::map<NodeId, Token> decl_pos;
    std::vector<PendingArc> arcs;
    std::optional<Token> entry_tok, exit_tok;

    while (!at(Tok::rbrace) && !at(Tok::eof)) {
      if (at_kw("place")) {
        parse_place(def, decl_pos, entry_tok, exit_tok);
      } else if (at_kw("trans")) {
        parse_trans(def, decl_pos, name);
      } else if (at_kw("arc")) {
        parse_arc(arcs);
      } else {
        error("EXPECTED_ITEM", "expected 'place', 'trans' or 'arc'", peek());
        skip_item();
      }
    }
    if (!accept(Tok::rbrace))
      error("EXPECTED_RBRACE", "expected '}' to close net '" + name + "'", peek());

    finish_net(def, decl_pos, arcs, name_tok);
    if (duplicate) return;
    if (first_net) {
      doc.root_name = name;
      doc.root = std::move(def);
      first_net = false;
    } else {
      doc.subnets.emplace(name, std::move(def));
    }
  }

  void parse_place(NetDef& def, std::map<NodeId, Token>& decl_pos,
                   std::optional<Token>& entry_tok, std::optional<Token>& exit_tok) {
    get();  // 'place'
    const Token id_tok = peek();
    auto id = parse_node_id();
    if (!id) {
      skip_item();
      return;
    }
    Place p;
    p.id = *id;
    if (accept_kw("entry")) {
      p.is_entry = true;
      if (entry_tok)
        error("MULTIPLE_ENTRY",
              "a second entry place; '" + def.net.entry + "' is already the entry",
              id_tok);
      else
        entry_tok = id_tok;
    }
    if (accept_kw("exit")) {
      p.is_exit = true;
      if (exit_tok)
        error("MULTIPLE_EXIT",
              "a second exit place; '" + def.net.exit + "' is already the exit",
              id_tok);
      else
        exit_tok = id_tok;
    }
    if (accept_kw("tc")) {
      auto w = parse_interval();
      if (!w) {
        skip_item();
        return;
      }
      p.window = *w;
    }
    if (!accept(Tok::semi)) {
      error("EXPECTED_SEMI", "expected ';' after place declaration", peek());
      skip_item();
    }
    if (decl_pos.count(p.id)) {
      error("DUPLICATE_ID", "identifier '" + p.id + "' is already declared", id_tok);
      return;
    }
    decl_pos.emplace(p.id, id_tok);
    if (p.is_entry && def.net.entry.empty()) def.net.entry = p.id;
    if (p.is_exit && def.net.exit.empty()) def.net.exit = p.id;
    def.net.places.push_back(std::move(p));
  }

  void parse_trans(NetDef& def, std::map<NodeId, Token>& decl_pos,
                   const std::string& net_name) {
    get();  // 'trans'
    const Token id_tok = peek();
    auto id = parse_node_id();
    if (!id) {
      skip_item();
      return;
    }
    Transition t;
    t.id = *id;
    if (at(Tok::string)) t.name = get().text;
    if (accept_kw("guard")) {
      auto g = parse_node_id();
      if (!g) {
        skip_item();
        return;
      }
      t.guard = *g;
    }
    if (accept_kw("pre")) {
      auto labels = parse_label_set();
      if (!labels) {
        skip_item();
        return;
      }
      if (!labels->empty()) def.pre[t.id] = *labels;
    }
    if (accept_kw("post")) {
      auto labels = parse_label_set();
      if (!labels) {
        skip_item();
        return;
      }
      if (!labels->empty()) def.post[t.id] = *labels;
    }
    if (accept_kw("tc")) {
      auto w = parse_interval();
      if (!w) {
        skip_item();
        return;
      }
      t.window = *w;
    }
    if (accept_kw("td")) {
      if (!at(Tok::number)) {
        error("EXPECTED_NUMBER", "expected a duration after 'td'", peek());
        skip_item();
        return;
      }
      t.duration = get().value;
    }
    if (accept_kw("refinable")) {
      t.refinable = true;
    } else if (at_kw("refine")) {
      get();
      if (!at(Tok::ident) || kReserved.count(peek().text)) {
        error("EXPECTED_IDENT", "expected a net name after 'refine'", peek());
        skip_item();
        return;
      }
      const Token target = get();
      t.refinable = true;
      bindings.push_back({net_name, t.id, target.text, target});
      def.bindings[t.id] = target.text;
    }
    if (!accept(Tok::semi)) {
      error("EXPECTED_SEMI", "expected ';' after transition declaration", peek());
      skip_item();
    }
    if (decl_pos.count(t.id)) {
      error("DUPLICATE_ID", "identifier '" + t.id + "' is already declared", id_tok);
      return;
    }
    decl_pos.emplace(t.id, id_tok);
    def.net.transitions.push_back(std::move(t));
  }

  void parse_arc(std::vector<PendingArc>& arcs) {
    get();  // 'arc'
    const Token src_tok = peek();
    auto src = parse_node_id();
    if (!src) {
      skip_item();
      return;
    }
    if (!accept(Tok::arrow)) {
      error("EXPECTED_ARROW", "expected '->' in arc declaration", peek());
      skip_item();
      return;
    }
    const Token dst_tok = peek();
    auto dst = parse_node_id();
    if (!dst) {
      skip_item();
      return;
    }
    if (!accept(Tok::semi)) {
      error("EXPECTED_SEMI", "expected ';' after arc declaration", peek());
      skip_item();
    }
    arcs.push_back({*src, *dst, src_tok, dst_tok});
  }

  void finish_net(NetDef& def, const std::map<NodeId, Token>& decl_pos,
                  const std::vector<PendingArc>& arcs, const Token& header) {
    for (const auto& a : arcs) {
      const bool src_place = def.net.find_place(a.source) != nullptr;
      const bool src_trans = def.net.find_transition(a.source) != nullptr;
      const bool dst_place = def.net.find_place(a.target) != nullptr;
      const bool dst_trans = def.net.find_transition(a.target) != nullptr;
      if (!src_place && !src_trans) {
        error("UNKNOWN_NODE", "arc source '" + a.source + "' is not declared", a.source_tok);
        continue;
      }
      if (!dst_place && !dst_trans) {
        error("UNKNOWN_NODE", "arc target '" + a.target + "' is not declared", a.target_tok);
        continue;
      }
      if ((src_place && dst_place) || (src_trans && dst_trans)) {
        error("ARC_SHAPE", "arc '" + a.source + " -> " + a.target +
              "' connects two nodes of the same kind", a.source_tok);
        continue;
      }
      Arc arc{a.source, a.target};
      if (std::find(def.net.arcs.begin(), def.net.arcs.end(), arc) != def.net.arcs.end())
        warn("DUPLICATE_ARC", "arc '" + a.source + " -> " + a.target +
             "' is declared twice", a.source_tok);
      else
        def.net.arcs.push_back(arc);
    }
    if (def.net.entry.empty())
      error("ENTRY_MISSING", "net has no entry place", header);
    if (def.net.exit.empty())
      error("EXIT_MISSING", "net has no exit place", header);
    def.net.normalize();

    // The parser's own checks mirror validate_structure; any residue means a
    // parser gap, reported at the declaration site as a safety net.
    if (!had_errors()) {
      for (const auto& v : validate_structure(def.net).violations) {
        auto it = decl_pos.find(v.where);
        const Token& tok = it == decl_pos.end() ? header : it->second;
        error(v.code, v.detail, tok);
      }
    }
  }

  void resolve_bindings() {
    for (const auto& b : bindings) {
      if (b.target != doc.root_name && !doc.subnets.count(b.target))
        error("UNKNOWN_SUBNET", "refine target '" + b.target + "' is not defined",
              b.target_tok);
    }
    if (had_errors()) return;
    for (const auto& v : validate_hierarchy(doc).violations) {
      if (v.code == "REFINEMENT_CYCLE") {
        Token tok = bindings.empty() ? toks.front() : bindings.front().target_tok;
        for (const auto& b : bindings)
          if (v.detail.find(b.target) != std::string::npos) {
            tok = b.target_tok;
            break;
          }
        error(v.code, "refinement cycle: " + v.detail, tok);
      } else {
        error(v.code, v.detail, toks.front());
      }
    }
  }
};

// ------------------------------------------------------------- patterns

struct PatternParser : Parser {
  using Parser::Parser;

  std::optional<PatternExpr> parse_expr() {
    if (!at(Tok::ident)) {
      error("EXPECTED_PATTERN", "expected seq/par/cond/loop/act", peek());
      return std::nullopt;
    }
    const Token head = get();
    if (!accept(Tok::lparen)) {
      error("EXPECTED_LPAREN", "expected '(' after '" + head.text + "'", peek());
      return std::nullopt;
    }
    std::optional<PatternExpr> result;
    if (head.text == "act") result = parse_act(head);
    else if (head.text == "seq") result = parse_seq(head);
    else if (head.text == "par") result = parse_par(head);
    else if (head.text == "cond") result = parse_cond(head);
    else if (head.text == "loop") result = parse_loop(head);
    else {
      error("UNKNOWN_PATTERN", "unknown pattern '" + head.text + "'", head);
      return std::nullopt;
    }
    if (!result) return std::nullopt;
    if (!accept(Tok::rparen)) {
      error("EXPECTED_RPAREN", "expected ')' to close '" + head.text + "'", peek());
      return std::nullopt;
    }
    return result;
  }

  std::optional<TimeInterval> parse_named_interval(const char* key) {
    if (!at_kw(key)) {
      error("EXPECTED_KEY", std::string("expected '") + key + "='", peek());
      return std::nullopt;
    }
    get();
    if (!accept(Tok::equals)) {
      error("EXPECTED_EQUALS", std::string("expected '=' after '") + key + "'", peek());
      return std::nullopt;
    }
    return parse_interval();
  }

  std::optional<PatternExpr> parse_act(const Token&) {
    if (!at(Tok::ident)) {
      error("EXPECTED_IDENT", "expected an activity name", peek());
      return std::nullopt;
    }
    std::string id = get().text;
    if (!accept(Tok::comma)) {
      error("EXPECTED_COMMA", "expected ',' after the activity name", peek());
      return std::nullopt;
    }
    auto teb = parse_named_interval("teb");
    if (!teb) return std::nullopt;
    return PatternExpr::leaf(std::move(id), *teb);
  }

  std::optional<PatternExpr> parse_seq(const Token&) {
    auto first = parse_expr();
    if (!first || !accept(Tok::comma)) {
      if (first) error("EXPECTED_COMMA", "expected ',' in seq", peek());
      return std::nullopt;
    }
    auto second = parse_expr();
    if (!second || !accept(Tok::comma)) {
      if (second) error("EXPECTED_COMMA", "expected ',' before tec", peek());
      return std::nullopt;
    }
    auto tec = parse_named_interval("tec");
    if (!tec) return std::nullopt;
    return PatternExpr::seq(std::move(*first), std::move(*second), *tec);
  }

  std::optional<PatternExpr> parse_par(const Token& head) {
    std::vector<PatternExpr> branches;
    do {
      auto b = parse_expr();
      if (!b) return std::nullopt;
      branches.push_back(std::move(*b));
    } while (accept(Tok::comma));
    if (branches.size() == 1) {
      warn("PAR_SINGLE", "parallel of a single branch collapses to the branch", head);
      return std::move(branches.front());
    }
    return PatternExpr::par(std::move(branches));
  }

  std::optional<PatternExpr> parse_cond(const Token& head) {
    auto pre = parse_expr();
    if (!pre || !accept(Tok::comma)) {
      if (pre) error("EXPECTED_COMMA", "expected ',' after the cond precondition", peek());
      return std::nullopt;
    }
    std::vector<PatternExpr> branches;
    while (true) {
      if (at_kw("tec")) break;
      auto b = parse_expr();
      if (!b) return std::nullopt;
      branches.push_back(std::move(*b));
      if (!accept(Tok::comma)) {
        error("EXPECTED_COMMA", "expected ',' before tec", peek());
        return std::nullopt;
      }
    }
    auto tec = parse_named_interval("tec");
    if (!tec) return std::nullopt;
    if (branches.empty()) {
      error("COND_EMPTY", "cond needs at least one branch", head);
      return std::nullopt;
    }
    if (branches.size() == 1) {
      warn("COND_SINGLE", "conditional of a single branch collapses to a sequence", head);
      return PatternExpr::seq(std::move(*pre), std::move(branches.front()), *tec);
    }
    return PatternExpr::cond(std::move(*pre), std::move(branches), *tec);
  }

  std::optional<PatternExpr> parse_loop(const Token&) {
    auto body = parse_expr();
    if (!body || !accept(Tok::comma)) {
      if (body) error("EXPECTED_COMMA", "expected ',' before k", peek());
      return std::nullopt;
    }
    if (!at_kw("k")) {
      error("EXPECTED_KEY", "expected 'k='", peek());
      return std::nullopt;
    }
    get();
    if (!accept(Tok::equals)) {
      error("EXPECTED_EQUALS", "expected '=' after 'k'", peek());
      return std::nullopt;
    }
    if (!at(Tok::number)) {
      error("EXPECTED_NUMBER", "expected a repetition count", peek());
      return std::nullopt;
    }
    const Token k_tok = get();
    if (k_tok.value < 1) {
      error("LOOP_BOUND", "loop count must be at least 1", k_tok);
      return std::nullopt;
    }
    return PatternExpr::loop(std::move(*body), k_tok.value);
  }
};

// ---------------------------------------------------------- serializing

void write_interval(std::ostream& os, const TimeInterval& w) {
  os << "[" << w.lo << ",";
  if (w.bounded())
    os << w.hi;
  else
    os << "inf";
  os << "]";
}

void write_netdef(std::ostream& os, const std::string& name, const NetDef& def) {
  Net net = def.net;
  net.normalize();
  os << "net " << name << " {\n";
  for (const auto& p : net.places) {
    os << "  place " << p.id;
    if (p.is_entry) os << " entry";
    if (p.is_exit) os << " exit";
    if (p.window != TimeInterval{0, TimeInterval::kUnbounded}) {
      os << " tc ";
      write_interval(os, p.window);
    }
    os << ";\n";
  }
  for (const auto& t : net.transitions) {
    os << "  trans " << t.id;
    if (!t.name.empty()) os << " \"" << t.name << "\"";
    if (!t.guard.empty()) os << " guard " << t.guard;
    auto write_labels = [&](const char* kw, const std::map<NodeId, std::set<std::string>>& m) {
      auto it = m.find(t.id);
      if (it == m.end() || it->second.empty()) return;
      os << " " << kw << " {";
      bool first = true;
      for (const auto& l : it->second) {
        if (!first) os << ",";
        first = false;
        os << l;
      }
      os << "}";
    };
    write_labels("pre", def.pre);
    write_labels("post", def.post);
    if (t.window != TimeInterval{0, 0}) {
      os << " tc ";
      write_interval(os, t.window);
    }
    if (t.duration != 0) os << " td " << t.duration;
    auto binding = def.bindings.find(t.id);
    if (binding != def.bindings.end())
      os << " refine " << binding->second;
    else if (t.refinable)
      os << " refinable";
    os << ";\n";
  }
  for (const auto& a : net.arcs) os << "  arc " << a.source << " -> " << a.target << ";\n";
  os << "}\n";
}

}  // namespace

std::string to_string(const Diagnostic& d) {
  std::ostringstream os;
  os << d.line << ":" << d.column << ": "
     << (d.severity == Diagnostic::Severity::error ? "error" : "warning") << "["
     << d.code << "] " << d.message;
  return os.str();
}

bool NetParseResult::ok() const {
  if (!net) return false;
  return std::none_of(diagnostics.begin(), diagnostics.end(), [](const Diagnostic& d) {
    return d.severity == Diagnostic::Severity::error;
  });
}

bool PatternParseResult::ok() const {
  if (!pattern) return false;
  return std::none_of(diagnostics.begin(), diagnostics.end(), [](const Diagnostic& d) {
    return d.severity == Diagnostic::Severity::error;
  });
}

NetParseResult parse_net(const SourceDocument& doc) {
  NetParseResult result;
  Lexer lexer(doc.text, result.diagnostics);
  NetParser parser(lexer.run(), result.diagnostics);
  parser.parse_document();
  if (!parser.had_errors()) result.net = std::move(parser.doc);
  return result;
}

std::string serialize_net(const HierarchicalNet& h) {
  std::ostringstream os;
  write_netdef(os, h.root_name, h.root);
  for (const auto& [name, def] : h.subnets) write_netdef(os, name, def);
  return os.str();
}

std::string serialize_flat(const Net& net, const std::string& name) {
  std::ostringstream os;
  write_netdef(os, name, NetDef{net, {}, {}, {}});
  return os.str();
}

PatternParseResult parse_pattern(const SourceDocument& doc) {
  PatternParseResult result;
  Lexer lexer(doc.text, result.diagnostics);
  PatternParser parser(lexer.run(), result.diagnostics);
  auto expr = parser.parse_expr();
  if (expr && !parser.at(Tok::eof))
    parser.error("TRAILING_INPUT", "unexpected input after the pattern expression",
                 parser.peek());
  if (expr && !parser.had_errors()) result.pattern = std::move(*expr);
  return result;
}

}  // namespace hpnet
