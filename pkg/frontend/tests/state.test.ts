import { describe, expect, it } from "vitest";

import {
  applySession,
  beginAnswer,
  answerSendFailed,
  retryAnswer,
  checkCustomForm,
  currentQuestionNumber,
  initialState,
} from "../src/state";
import { renderApp, escapeHtml } from "../src/render";
import type { SessionJson } from "../src/api";

// exactly the shape /api/sessions returns for the four-object preset
function freshBarbet(): SessionJson {
  return {
    id: "a".repeat(32),
    state: "active",
    question: "Is it alpha?",
    question_number: 1,
    question_count: 0,
    won_object: null,
    final_answer: null,
    transcript: [],
    expected_questions: 2.3,
    entropy: 1.9709505944546686,
    entropy_plus_one: 2.9709505944546686,
  };
}

function wonBarbet(): SessionJson {
  return {
    id: "a".repeat(32),
    state: "won",
    question: null,
    question_number: 4,
    question_count: 4,
    won_object: "delta",
    final_answer: "yes",
    transcript: [
      { question: "Is it alpha?", labels: ["alpha"], answer: "no" },
      { question: "Is it beta?", labels: ["beta"], answer: "no" },
      { question: "Is it gamma?", labels: ["gamma"], answer: "no" },
      { question: "Is it delta?", labels: ["delta"], answer: "yes" },
    ],
    expected_questions: 2.3,
    entropy: 1.9709505944546686,
    entropy_plus_one: 2.9709505944546686,
  };
}

describe("applySession", () => {
  it("maps a fresh session to a playing state", () => {
    const state = applySession(freshBarbet());
    expect(state.phase).toEqual({
      kind: "playing",
      question: "Is it alpha?",
      inFlight: false,
      notice: null,
    });
    expect(state.sessionId).toBe("a".repeat(32));
    expect(state.history).toEqual([]);
    expect(currentQuestionNumber(state)).toBe(1);
    expect(state.scoreboard?.expectedQuestions).toBe(2.3);
  });

  it("keeps question number = history length + 1 while playing", () => {
    const midGame: SessionJson = {
      ...freshBarbet(),
      question: "Is it gamma?",
      question_number: 3,
      question_count: 2,
      transcript: [
        { question: "Is it alpha?", labels: ["alpha"], answer: "no" },
        { question: "Is it beta?", labels: ["beta"], answer: "no" },
      ],
    };
    const state = applySession(midGame);
    expect(state.history).toHaveLength(2);
    expect(currentQuestionNumber(state)).toBe(midGame.question_number);
  });

  it("maps a won session to the won phase", () => {
    const state = applySession(wonBarbet());
    expect(state.phase).toEqual({ kind: "won", object: "delta", questions: 4 });
    expect(state.history[state.history.length - 1]?.answer).toBe("yes");
  });

  it("refuses a win whose last recorded answer is no", () => {
    const lying = wonBarbet();
    lying.transcript[3] = { question: "Is it delta?", labels: ["delta"], answer: "no" };
    const state = applySession(lying);
    expect(state.phase.kind).toBe("broken");
    expect(renderApp(state)).not.toContain("Final answer");
  });

  it("refuses a win without final_answer yes", () => {
    const lying = { ...wonBarbet(), final_answer: null };
    expect(applySession(lying).phase.kind).toBe("broken");
  });

  it("maps an inconsistent session to its banner phase", () => {
    const dead: SessionJson = {
      ...wonBarbet(),
      state: "inconsistent",
      won_object: null,
      final_answer: null,
      transcript: wonBarbet().transcript.map((t) => ({ ...t, answer: "no" as const })),
    };
    const state = applySession(dead);
    expect(state.phase).toEqual({ kind: "inconsistent" });
  });
});

describe("answer in flight", () => {
  it("ignores a second click while the first request is out", () => {
    const playing = applySession(freshBarbet());
    const first = beginAnswer(playing, "no");
    expect(first).not.toBeNull();
    expect(first!.pendingAnswer).toBe("no");
    expect(beginAnswer(first!, "no")).toBeNull();
    expect(beginAnswer(first!, "yes")).toBeNull();
  });

  it("ignores clicks outside the playing phase", () => {
    expect(beginAnswer(initialState(), "yes")).toBeNull();
    expect(beginAnswer(applySession(wonBarbet()), "yes")).toBeNull();
  });

  it("keeps the answer for retry after a failed send", () => {
    const inFlight = beginAnswer(applySession(freshBarbet()), "no")!;
    const failed = answerSendFailed(inFlight, "could not reach the server");
    expect(failed.pendingAnswer).toBe("no");
    expect(failed.phase).toMatchObject({ kind: "playing", inFlight: false });
    const retried = retryAnswer(failed);
    expect(retried).not.toBeNull();
    expect(retried!.phase).toMatchObject({ kind: "playing", inFlight: true, notice: null });
  });

  it("has nothing to retry without a pending answer", () => {
    expect(retryAnswer(applySession(freshBarbet()))).toBeNull();
  });
});

describe("checkCustomForm", () => {
  it("accepts a clean two-object form", () => {
    const check = checkCustomForm("heads, tails", "0.5, 0.5");
    expect(check).toEqual({ ok: true, form: { labels: ["heads", "tails"], probs: [0.5, 0.5] } });
  });

  it("rejects probabilities summing to 0.9", () => {
    const check = checkCustomForm("a, b", "0.7, 0.2");
    expect(check.ok).toBe(false);
    if (!check.ok) {
      expect(check.error).toContain("sum");
    }
  });

  it("rejects mismatched counts, duplicates, and junk numbers", () => {
    expect(checkCustomForm("a, b, c", "0.5, 0.5").ok).toBe(false);
    expect(checkCustomForm("a, a", "0.5, 0.5").ok).toBe(false);
    expect(checkCustomForm("a, b", "0.5, potato").ok).toBe(false);
    expect(checkCustomForm("a, b", "1.5, -0.5").ok).toBe(false);
    expect(checkCustomForm("", "").ok).toBe(false);
  });
});

describe("renderApp", () => {
  it("is a pure function of the state", () => {
    const state = applySession(freshBarbet());
    expect(renderApp(state)).toBe(renderApp(state));
  });

  it("shows the scoreboard to three decimals with the running count", () => {
    const html = renderApp(applySession(wonBarbet()));
    expect(html).toContain("1.971");
    expect(html).toContain("2.300");
    expect(html).toContain("2.971");
    expect(html).toContain("<dd>4</dd>");
  });

  it("renders the won banner with the question count", () => {
    const html = renderApp(applySession(wonBarbet()));
    expect(html).toContain("delta in 4 questions. Final answer: Yes!");
  });

  it("disables the answer buttons while a request is out", () => {
    const inFlight = beginAnswer(applySession(freshBarbet()), "no")!;
    expect(renderApp(inFlight)).toContain("disabled");
    expect(renderApp(applySession(freshBarbet()))).not.toContain("disabled");
  });

  it("offers a retry button after a failed send", () => {
    const inFlight = beginAnswer(applySession(freshBarbet()), "no")!;
    const html = renderApp(answerSendFailed(inFlight, "could not reach the server"));
    expect(html).toContain("could not reach the server");
    expect(html).toContain('data-action="retry"');
    expect(html).toContain("Retry no");
  });

  it("shows a form error inline on the start screen", () => {
    const state = {
      ...initialState(),
      phase: { kind: "start" as const, formError: "probabilities sum to 0.9, not 1" },
    };
    expect(renderApp(state)).toContain("probabilities sum to 0.9, not 1");
  });

  it("escapes object names", () => {
    const spicy = { ...wonBarbet(), won_object: "<script>" };
    spicy.transcript[3] = { question: "Is it <script>?", labels: ["<script>"], answer: "yes" };
    const html = renderApp(applySession(spicy));
    expect(html).not.toContain("<script>");
    expect(html).toContain("&lt;script&gt;");
  });
});

describe("escapeHtml", () => {
  it("covers the five special characters", () => {
    expect(escapeHtml(`<a href="x" title='y'>&</a>`)).toBe(
      "&lt;a href=&quot;x&quot; title=&#39;y&#39;&gt;&amp;&lt;/a&gt;",
    );
  });
});
