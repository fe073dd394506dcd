from gamevolt.events.event import Event


def test_subscribers_run_in_order():
    calls: list[str] = []
    event: Event = Event()
    event.subscribe(lambda x: calls.append(f"a{x}"))
    event.subscribe(lambda x: calls.append(f"b{x}"))

    event.invoke(1)

    assert calls == ["a1", "b1"]


def test_returned_callable_unsubscribes():
    calls: list[int] = []
    event: Event = Event()
    unsubscribe = event.subscribe(calls.append)

    unsubscribe()
    event.invoke(5)

    assert calls == []
    assert event.subscriber_count == 0


def test_subscriber_may_unsubscribe_itself_during_invoke():
    calls: list[str] = []
    event: Event = Event()

    def once() -> None:
        calls.append("once")
        event.unsubscribe(once)

    event.subscribe(once)
    event.subscribe(lambda: calls.append("always"))
    event.invoke()
    event.invoke()

    assert calls == ["once", "always", "always"]
