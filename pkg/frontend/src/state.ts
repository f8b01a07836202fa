// View state with its two invariants: the selected candidate tab always
// stays within the available range, and hover is cleared whenever the
// displayed pair changes.

export interface HoverRef {
  ring: "source" | "target";
  index: number;
}

export interface ViewState {
  methodId: string | null;
  compareId: string | null;
  sourceId: string | null;
  tab: number; // 1-based
  tabCount: number;
  hover: HoverRef | null;
}

export function initialState(): ViewState {
  return { methodId: null, compareId: null, sourceId: null, tab: 1, tabCount: 0, hover: null };
}

export function selectMethod(state: ViewState, methodId: string, compareId: string | null): ViewState {
  return { ...state, methodId, compareId, sourceId: null, tab: 1, tabCount: 0, hover: null };
}

export function selectPair(state: ViewState, sourceId: string, tabCount: number): ViewState {
  return { ...state, sourceId, tab: 1, tabCount, hover: null };
}

export function selectTab(state: ViewState, tab: number): ViewState {
  const clamped = Math.min(Math.max(1, tab), Math.max(1, state.tabCount));
  return { ...state, tab: clamped, hover: null };
}

export function setHover(state: ViewState, hover: HoverRef | null): ViewState {
  return { ...state, hover };
}

// Monotonic token for in-flight requests: responses that are not the
// latest are dropped, so a slow pair fetch never paints over a newer one.
export class RequestGate {
  private seq = 0;

  next(): number {
    this.seq += 1;
    return this.seq;
  }

  isCurrent(token: number): boolean {
    return token === this.seq;
  }
}
