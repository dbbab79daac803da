import { describe, expect, it } from "vitest";

import { ApiClient, ApiError, DocumentPayload, TokenStatus } from "../src/api.js";
import { AnnotationSession } from "../src/session.js";

function doc(statusRows: TokenStatus[][]): DocumentPayload {
  return {
    id: "d1",
    title: "t",
    text: "",
    created_at: "",
    tokens: statusRows.reduce((n, r) => n + r.length, 0),
    sentences: statusRows.map((row, s) => ({
      index: s,
      start: 0,
      end: 0,
      text: "",
      tokens: row.map((status, t) => ({
        index: t,
        surface: `w${s}${t}`,
        start: t,
        end: t + 1,
        kind: "word",
        status,
        tag: status === "untagged" ? null : "N-S",
        annotator: null,
      })),
    })),
  };
}

class FakeApi extends ApiClient {
  posted: Array<{ sent: number; tok: number; tag: string }> = [];
  failWith: "none" | "422" | "network" = "none";

  constructor() {
    super("http://unused");
  }

  override async postAnnotation(
    _doc: string,
    sent: number,
    tok: number,
    tag: string,
  ): Promise<never> {
    if (this.failWith === "422") throw new ApiError(422, "unknown_tag", "unknown tag");
    if (this.failWith === "network") throw new TypeError("fetch failed");
    this.posted.push({ sent, tok, tag });
    return { doc_id: "d1", sentence_index: sent, token_index: tok, tag, provenance: "human", annotator: "", timestamp: "" } as never;
  }

  override async suggest(): Promise<{ suggestions: [] }> {
    return { suggestions: [] };
  }
}

describe("cursor", () => {
  it("starts at the first untagged token", () => {
    const session = new AnnotationSession(doc([["machine", "untagged"], ["untagged"]]));
    expect(session.cursor).toEqual({ sentence: 0, token: 1 });
  });

  it("is null when every token is tagged", () => {
    const session = new AnnotationSession(doc([["human", "machine"]]));
    expect(session.cursor).toBeNull();
    expect(session.complete).toBe(true);
  });

  it("wraps past the end to earlier untagged tokens", () => {
    const session = new AnnotationSession(doc([["untagged", "human", "untagged"]]));
    session.moveTo({ sentence: 0, token: 2 });
    expect(session.nextUntagged(session.cursor)).toEqual({ sentence: 0, token: 0 });
  });
});

describe("acceptSuggestion", () => {
  it("hints on out-of-range rank and does not move", async () => {
    const session = new AnnotationSession(doc([["untagged", "untagged"]]));
    session.suggestions = [
      { tag: "N-S", score: 0.9, rule_id: "r", explanation: "" },
      { tag: "UNK", score: 0.05, rule_id: "u", explanation: "" },
    ];
    const outcome = await session.acceptSuggestion(new FakeApi(), 3);
    expect(outcome.kind).toBe("hint");
    expect(session.cursor).toEqual({ sentence: 0, token: 0 });
    expect(session.statuses[0][0]).toBe("untagged");
  });

  it("posts the chosen tag and advances to the next untagged token", async () => {
    const api = new FakeApi();
    const session = new AnnotationSession(doc([["untagged", "machine", "untagged"]]));
    session.suggestions = [{ tag: "N-DNP", score: 0.7, rule_id: "r", explanation: "" }];
    const outcome = await session.acceptSuggestion(api, 1);
    expect(outcome).toEqual({ kind: "accepted", tag: "N-DNP" });
    expect(api.posted).toEqual([{ sent: 0, tok: 0, tag: "N-DNP" }]);
    expect(session.statuses[0][0]).toBe("human");
    expect(session.cursor).toEqual({ sentence: 0, token: 2 });
  });

  it("reports completion when the last token is accepted", async () => {
    const session = new AnnotationSession(doc([["human", "untagged"]]));
    session.suggestions = [{ tag: "UNK", score: 0.05, rule_id: "u", explanation: "" }];
    const outcome = await session.acceptSuggestion(new FakeApi(), 1);
    expect(outcome.kind).toBe("complete");
    expect(session.cursor).toBeNull();
    expect(session.complete).toBe(true);
  });

  it("rolls back and stays put on a 422", async () => {
    const api = new FakeApi();
    api.failWith = "422";
    const session = new AnnotationSession(doc([["untagged", "untagged"]]));
    session.suggestions = [{ tag: "N-S", score: 0.9, rule_id: "r", explanation: "" }];
    const outcome = await session.acceptSuggestion(api, 1);
    expect(outcome.kind).toBe("rejected");
    expect(session.statuses[0][0]).toBe("untagged");
    expect(session.cursor).toEqual({ sentence: 0, token: 0 });
  });

  it("rolls back and asks for a retry on network failure", async () => {
    const api = new FakeApi();
    api.failWith = "network";
    const session = new AnnotationSession(doc([["untagged"]]));
    session.suggestions = [{ tag: "N-S", score: 0.9, rule_id: "r", explanation: "" }];
    const outcome = await session.acceptSuggestion(api, 1);
    expect(outcome.kind).toBe("network");
    expect(session.statuses[0][0]).toBe("untagged");
  });
});

describe("applyServer", () => {
  it("takes server statuses and keeps the cursor on an existing token", () => {
    const session = new AnnotationSession(doc([["untagged", "untagged"]]));
    session.statuses[0][0] = "human"; // optimistic local state
    session.applyServer(doc([["machine", "machine"]]));
    expect(session.statuses[0][0]).toBe("machine");
    expect(session.cursor).toEqual({ sentence: 0, token: 0 });
    expect(session.tokenExists(session.cursor!)).toBe(true);
  });

  it("re-homes the cursor when its token disappears", () => {
    const session = new AnnotationSession(doc([["untagged", "untagged"]]));
    session.moveTo({ sentence: 0, token: 1 });
    session.applyServer(doc([["untagged"]]));
    expect(session.cursor).toEqual({ sentence: 0, token: 0 });
  });
});
